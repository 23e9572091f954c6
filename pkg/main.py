import sys

from dotenv import load_dotenv

# Γ-semigroup command line: validate, classify, check, verify, generate, catalog, cache, artifacts, hom
from cli.app import main

load_dotenv()

if __name__ == "__main__":
    sys.exit(main())
