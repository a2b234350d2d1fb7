import sys
from pathlib import Path

try:
    import slopecalc  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).parent / "src"))
