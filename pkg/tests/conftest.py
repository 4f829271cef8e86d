import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(results):
        ok, title, dt, limit, detail = results[num]
        tr.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}  "
                      f"[{dt:.2f}s / {limit}s]  {detail}")
    passed = sum(1 for r in results.values() if r[0])
    tr.write_line(f"{passed}/{len(results)} criteria passed")
