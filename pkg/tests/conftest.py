def pytest_terminal_summary(terminalreporter):
    lines = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and getattr(rep, "when", "call") == "call":
                lines[props["criterion"]] = "PASS" if rep.passed else "FAIL"
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(f"criterion {number}: {lines[number]}")
