# Import built-in modules
from pathlib import Path

PACKAGE_NAME = "ghsimplex"
THIS_ROOT = Path(__file__).parent.parent
