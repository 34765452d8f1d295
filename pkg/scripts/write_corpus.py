#!/usr/bin/env python3
"""Write the built-in corpus automata out as .pda files, one per entry,
so the CLI can be exercised on real files."""

import argparse
from pathlib import Path

from pdacfg import builtin_corpus, render


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("directory", nargs="?", default="corpus",
                        help="target directory (default ./corpus)")
    args = parser.parse_args(argv)

    target = Path(args.directory)
    target.mkdir(parents=True, exist_ok=True)
    for entry in builtin_corpus():
        path = target / f"{entry.name}.pda"
        path.write_text(f"# {entry.notes}\n" + render(entry.pda), encoding="utf-8")
        print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
