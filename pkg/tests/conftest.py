def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        ok, line = RESULTS[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {line}")
