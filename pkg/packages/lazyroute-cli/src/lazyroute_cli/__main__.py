"""Entry point of the ``lazyroute`` command."""

import sys

from lazyroute_common.errors import LazyRouteError

from .commands import cli


def main():
    """Run the command group; uncaught failures exit with status 1."""
    try:
        cli(prog_name="lazyroute")
    except KeyboardInterrupt:
        print("\nAborted!", file=sys.stderr)
        sys.exit(1)
    except LazyRouteError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(1)
    except Exception as e:
        print(f"Unexpected error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
