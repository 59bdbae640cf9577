import support


def pytest_terminal_summary(terminalreporter):
    if support.ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in sorted(support.ACCEPTANCE_LOG, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
