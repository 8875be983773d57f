import sys
from pathlib import Path

# Allow running the suite from a fresh checkout without installation.
SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


def assert_close(a: float, b: float, rel: float = 1e-9, abs_tol: float = 1e-12) -> None:
    gap = abs(a - b)
    bound = max(abs_tol, rel * max(abs(a), abs(b)))
    assert gap <= bound, f"{a!r} != {b!r} (gap {gap:.3e} > bound {bound:.3e})"
