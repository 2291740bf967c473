#!/usr/bin/env python3
"""Print the full benchmark comparison grid in both fs-variant conventions."""

from haarnewton.bench import builtin_suite, format_table, run_comparison
from haarnewton.methods import FsVariant, MethodId


def main() -> None:
    suite = builtin_suite()
    for variant in FsVariant:
        methods = [
            MethodId("wf"),
            MethodId("fs", fs_variant=variant),
            MethodId("oz"),
            MethodId("klw"),
            MethodId("new", haar_points=2),
        ]
        print(f"== fs inner point: {variant.value} ==")
        print(format_table(run_comparison(suite, methods), "text"))


if __name__ == "__main__":
    main()
