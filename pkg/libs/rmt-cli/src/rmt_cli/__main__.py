from __future__ import annotations

import sys

from rmt_cli.main import cli

if __name__ == "__main__":
    sys.exit(cli())
