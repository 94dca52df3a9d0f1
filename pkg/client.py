"""A CLI for the bastree library."""

import sys

try:
    from bastree.client import main

except ModuleNotFoundError:
    import os

    sys.path.append(f"{os.path.dirname(__file__)}/src")

    from bastree.client import main

if __name__ == "__main__":
    main()
