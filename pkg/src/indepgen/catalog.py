"""Group files and the bundled catalog.

A group file starts with ``degree k``; every further line is one generator
in cycle notation (``()`` for the identity). Lines starting with ``#`` and
blank lines are ignored.
"""

from __future__ import annotations

from contextlib import ExitStack
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DEFAULT_BUDGET, Budget, BudgetExceeded, InvalidInput
from .perm import PermGroup, group_closure, parse_permutation

SUFFIX = ".grp"


def parse_group_text(text: str, label: str | None = None, budget: Budget = DEFAULT_BUDGET) -> PermGroup:
    lines = [(n, ln.strip()) for n, ln in enumerate(text.splitlines(), 1)]
    lines = [(n, ln) for n, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InvalidInput("empty group file")
    n, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "degree" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise InvalidInput(f"line {n}: expected 'degree k' with k >= 1")
    degree = int(parts[1])
    gens = []
    for n, ln in lines[1:]:
        try:
            gens.append(parse_permutation(ln, degree))
        except InvalidInput as exc:
            raise InvalidInput(f"line {n}: {exc}") from None
    return group_closure(gens, degree, budget, label=label)


def load_group_file(path, budget: Budget = DEFAULT_BUDGET) -> PermGroup:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    return parse_group_text(text, label=path.stem, budget=budget)


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    path: Path
    group: PermGroup | None
    skipped: str | None = None


def load_catalog(directory, budget: Budget = DEFAULT_BUDGET, max_order: int | None = None
                 ) -> list[CatalogEntry]:
    """Every ``*.grp`` file in ``directory``, sorted by label.

    Files that fail to parse or close within budget come back with ``group``
    unset and the reason in ``skipped``.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise InvalidInput(f"{directory} is not a directory")
    entries = []
    for path in sorted(directory.glob("*" + SUFFIX)):
        try:
            group = load_group_file(path, budget)
        except (InvalidInput, BudgetExceeded) as exc:
            entries.append(CatalogEntry(path.stem, path, None, f"{type(exc).__name__}: {exc}"))
            continue
        if max_order is not None and group.order > max_order:
            entries.append(CatalogEntry(path.stem, path, None, f"order {group.order} above {max_order}"))
            continue
        entries.append(CatalogEntry(path.stem, path, group))
    return entries


def bundled_catalog_dir(stack: ExitStack) -> Path:
    """Filesystem path of the bundled catalog, kept alive by ``stack``."""
    ref = resources.files("indepgen").joinpath("data/catalog")
    return stack.enter_context(resources.as_file(ref))


def bundled_catalog(budget: Budget = DEFAULT_BUDGET) -> list[CatalogEntry]:
    with ExitStack() as stack:
        return load_catalog(bundled_catalog_dir(stack), budget)
