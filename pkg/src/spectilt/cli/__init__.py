"""Session language, command dispatch and report emission."""

from .dsl import DslError, parse_command_line, parse_session_text
from .report import Report, emit, parse_json
from .session import Session, parse_session, random_suite


def run_command(session, command, flags=None):
    """Run one command (a string such as ``"bass p M --max 3"``) in an evaluated session."""
    from .dsl import Stmt

    if isinstance(command, Stmt):
        st = command
    else:
        st = parse_command_line(command)
    if flags:
        st.data["flags"].update(flags)
    return session.run_command(st)


__all__ = [
    "DslError", "Report", "Session", "emit", "parse_command_line", "parse_json", "parse_session",
    "parse_session_text", "random_suite", "run_command",
]
