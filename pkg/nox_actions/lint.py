# Import third-party modules
import nox

from nox_actions.utils import PACKAGE_NAME

LINT_TARGETS = [PACKAGE_NAME, "tests", "nox_actions"]


def lint(session: nox.Session) -> None:
    session.install("isort", "ruff")
    session.run("isort", "--check-only", *LINT_TARGETS)
    session.run("ruff", "check", *LINT_TARGETS)


def lint_fix(session: nox.Session) -> None:
    session.install("isort", "ruff")
    session.run("ruff", "check", "--fix", *LINT_TARGETS)
    session.run("isort", *LINT_TARGETS)
