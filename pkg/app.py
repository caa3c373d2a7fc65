# ======================
# CONFIG
# ======================

import argparse
import importlib
import logging
import sys

from scripts.config import get_settings
from scripts.errors import ChainGraphError


# ======================
# COMMAND ROUTER
# ======================

COMMAND_ROUTER = {

    "check": "front.check",
    "components": "front.components",
    "complexes": "front.complexes",
    "moralize": "front.moralize",
    "sep": "front.sep",
    "pattern": "front.pattern",
    "largest": "front.largest",
    "recover": "front.recover",
    "equiv": "front.equiv",
    "inputlist": "front.inputlist",
    "closure": "front.closure",
    "class": "front.equiv_class",
    "sweep": "front.sweep",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaingraph",
        description="Chain graph separation, equivalence and structure recovery.",
    )
    parser.add_argument("--log-level", default=None,
                        help="override CHAINGRAPH_LOG_LEVEL (DEBUG, INFO, WARNING, ...)")
    commands = parser.add_subparsers(dest="command", required=True)

    for command, module_name in COMMAND_ROUTER.items():
        module = importlib.import_module(module_name)
        sub = commands.add_parser(command, help=module.HELP, description=module.HELP)
        module.add_arguments(sub)
        sub.set_defaults(module=module)

    return parser


# ======================
# ENTRY
# ======================

def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    level = (args.log_level or get_settings().log_level).upper()
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.module.render(args)
    except (ChainGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
