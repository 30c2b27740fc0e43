from __future__ import annotations

from ci_metrics._main import main

if __name__ == "__main__":
    raise SystemExit(main())
