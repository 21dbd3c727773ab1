"""
Direct runner for the test scripts.

Each scripts/test_*.py works under pytest and also as ``python scripts/test_x.py``,
which calls ``run_all`` to execute its test functions and print a summary.
"""

import os
import sys
import traceback

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def full_suite() -> bool:
    """Long acceptance runs are enabled with MDC_FULL_SUITE=1."""
    return os.getenv('MDC_FULL_SUITE', '').strip() not in ('', '0', 'false', 'False')


def run_all(title: str, namespace: dict) -> int:
    """Run every ``test_*`` callable in ``namespace``; returns a process exit code."""
    print("\n" + "=" * 70)
    print(title)
    print("=" * 70)

    results = []
    for name, func in list(namespace.items()):
        if not name.startswith('test_') or not callable(func):
            continue
        try:
            func()
            results.append((name, True))
        except KeyboardInterrupt:
            raise
        except BaseException as e:
            # pytest.skip raises a BaseException subclass named Skipped
            if type(e).__name__ == 'Skipped':
                print(f"[SKIP] {name}: {e}")
                continue
            print(f"[FAIL] {name}: {e}")
            traceback.print_exc()
            results.append((name, False))

    print("\n" + "=" * 70)
    print("TEST SUMMARY")
    print("=" * 70)
    for name, passed in results:
        print(f"{'[PASS]' if passed else '[FAIL]'}: {name}")

    passed = sum(1 for _, ok in results if ok)
    print(f"\nTotal: {passed}/{len(results)} tests passed")
    return 0 if passed == len(results) else 1
