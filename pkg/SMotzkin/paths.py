"""Partial S-Motzkin paths, their validity rules and the brute-force counting oracle."""

import enum
import logging

from .config import get_config

log = logging.getLogger(__name__)

# Typing
Height = int
Length = int


class Step(enum.Enum):
    """Kinds of steps."""

    UP = 'u'
    LEVEL = 'h'
    DOWN = 'd'

    @property
    def delta(self) -> Height:
        """Height change of the step."""
        return _DELTAS[self]


_DELTAS = {Step.UP: 1, Step.LEVEL: 0, Step.DOWN: -1}


class Direction(enum.Enum):
    """Reading direction of a partial path."""

    FORWARD = 0  # Prefix of an S-Motzkin path
    REVERSE = 1  # Suffix of an S-Motzkin path read from right to left


class FamilyTag(enum.Enum):
    """Counting families."""

    A = 'a'  # Forward, last non-down step is up (or there is none)
    B = 'b'  # Forward, last non-down step is level
    C = 'c'  # Reverse, last non-up step is level (or there is none)
    D = 'd'  # Reverse, last non-up step is down


str_to_family = {tag.value: tag for tag in FamilyTag}

# Step that is unconstrained in the given direction
_FREE_STEP = {Direction.FORWARD: Step.DOWN, Direction.REVERSE: Step.UP}
# The constrained steps must spell a prefix of this two-letter word repeated
_ALTERNATION = {Direction.FORWARD: (Step.LEVEL, Step.UP), Direction.REVERSE: (Step.DOWN, Step.LEVEL)}
# Family by parity of the number of constrained steps
_FAMILIES = {Direction.FORWARD: (FamilyTag.A, FamilyTag.B), Direction.REVERSE: (FamilyTag.C, FamilyTag.D)}


class InvalidPathError(ValueError):
    """The path breaks the rules of its reading direction."""


class OracleBoundError(ValueError):
    """Requested oracle length exceeds the configured hard limit."""


class LatticePath:
    """A sequence of steps starting at height 0."""

    def __init__(self, steps=()):
        """
        Construct a path.

        :param steps: Steps in order.
        """
        self.steps: tuple[Step, ...] = tuple(steps)
        heights = [0]
        for step in self.steps:
            heights.append(heights[-1] + step.delta)
        self._heights = tuple(heights)

    def height(self, j: Length) -> Height:
        """
        Height after ``j`` steps.

        :param j: Number of steps taken, 0 <= j <= len(path).
        """
        return self._heights[j]

    @property
    def heights(self) -> tuple[Height, ...]:
        """Height profile, starting with 0."""
        return self._heights

    @property
    def final_height(self) -> Height:
        """Height after the last step."""
        return self._heights[-1]

    def word(self) -> str:
        """Path as a word over u, h, d."""
        return ''.join(step.value for step in self.steps)

    def __len__(self) -> int:
        """Return number of steps."""
        return len(self.steps)

    def __eq__(self, other):
        """Compare by value."""
        if not isinstance(other, LatticePath):
            return NotImplemented
        return self.steps == other.steps

    def __hash__(self):
        """Return hash consistent with equality."""
        return hash(self.steps)

    def __str__(self) -> str:
        """Return user-friendly string representation."""
        return f'\nPath "{self.word()}"\n' \
            f'    length = {len(self)}\n' \
            f'    heights = {list(self._heights)}'

    def __repr__(self) -> str:
        """Return technical string representation."""
        return f'LatticePath("{self.word()}")'


def parse_path(word: str) -> LatticePath:
    """
    Build a path from a word over the letters u, h, d.

    :param word: E.g. ``"hud"``.
    """
    try:
        return LatticePath(Step(letter) for letter in word)
    except ValueError:
        raise ValueError(f'Not a path word: {word!r}') from None


def is_valid(path: LatticePath, direction: Direction) -> bool:
    """
    Check both validity conditions for the given reading direction.

    Heights must stay non-negative, and the steps other than the free one
    (down for forward paths, up for reverse paths) must spell a prefix of
    ``huhu...`` (forward) or ``dhdh...`` (reverse).

    :param path: Path to check.
    :param direction: Reading direction.
    """
    if min(path.heights) < 0:
        return False
    free = _FREE_STEP[direction]
    word = _ALTERNATION[direction]
    constrained = [step for step in path.steps if step is not free]
    return all(step is word[i % 2] for i, step in enumerate(constrained))


def is_valid_forward(path: LatticePath) -> bool:
    """Whether ``path`` is a partial S-Motzkin path."""
    return is_valid(path, Direction.FORWARD)


def is_valid_reverse(path: LatticePath) -> bool:
    """Whether ``path`` is a partial reverse S-Motzkin path."""
    return is_valid(path, Direction.REVERSE)


def is_smotzkin(path: LatticePath) -> bool:
    """Whether ``path`` is a complete S-Motzkin path."""
    counts = {step: path.steps.count(step) for step in Step}
    return is_valid_forward(path) and path.final_height == 0 and \
        counts[Step.UP] == counts[Step.LEVEL] == counts[Step.DOWN]


def classify(path: LatticePath, direction: Direction) -> FamilyTag:
    """
    Get the counting family of a valid path.

    The family only depends on the parity of the number of constrained
    steps; the empty path is A (forward) or C (reverse).

    :param path: Valid path.
    :param direction: Reading direction.
    :raise InvalidPathError: If the path is not valid for ``direction``.
    """
    if not is_valid(path, direction):
        raise InvalidPathError(f'{path!r} is not a valid {direction.name.lower()} path')
    free = _FREE_STEP[direction]
    constrained = sum(1 for step in path.steps if step is not free)
    return _FAMILIES[direction][constrained % 2]


def split_path(path: LatticePath, j: Length) -> tuple[LatticePath, LatticePath]:
    """
    Cut a path after ``j`` steps.

    :param path: Path to cut.
    :param j: Cut position.
    :return: The prefix, and the suffix read from right to left
        (order reversed, up and down swapped).
    """
    if not 0 <= j <= len(path):
        raise ValueError(f'Cut position {j} outside 0..{len(path)}')
    flip = {Step.UP: Step.DOWN, Step.DOWN: Step.UP, Step.LEVEL: Step.LEVEL}
    suffix = [flip[step] for step in reversed(path.steps[j:])]
    return LatticePath(path.steps[:j]), LatticePath(suffix)


def _walk(direction: Direction, n_max: Length):
    """
    Depth-first generation of valid words with pruning.

    Yields ``(steps, height, parity)`` for every valid path of length at most
    ``n_max``, where ``parity`` is the number of constrained steps mod 2.
    """
    free = _FREE_STEP[direction]
    word = _ALTERNATION[direction]
    stack = [((), 0, 0)]
    while stack:
        steps, height, parity = stack.pop()
        yield steps, height, parity
        if len(steps) == n_max:
            continue
        # Pushed in reverse so that words come out in lexicographic step order
        children = []
        if height + free.delta >= 0:
            children.append((steps + (free,), height + free.delta, parity))
        step = word[parity]
        if height + step.delta >= 0:
            children.append((steps + (step,), height + step.delta, 1 - parity))
        stack.extend(reversed(children))


def enumerate_paths(direction: Direction, n: Length):
    """
    Generate every valid partial path of length ``n``.

    :param direction: Reading direction.
    :param n: Length.
    """
    for steps, _, _ in _walk(direction, n):
        if len(steps) == n:
            yield LatticePath(steps)


def oracle_counts(direction: Direction, n_max: Length, hard_limit: Length | None = None):
    """
    Count valid paths by exhaustive generation.

    :param direction: Reading direction.
    :param n_max: Largest length.
    :param hard_limit: Resource guard; defaults to the configured limit.
    :return: Pair of count tables, (A, B) for forward and (C, D) for reverse.
    :raise OracleBoundError: If ``n_max`` exceeds the hard limit.
    """
    from .recurrences import CountTable

    if n_max < 0:
        raise ValueError(f'Negative length: {n_max}')
    if hard_limit is None:
        hard_limit = get_config().ORACLE_HARD_LIMIT
    if n_max > hard_limit:
        raise OracleBoundError(f'Oracle length {n_max} exceeds the hard limit {hard_limit}')

    tallies = [[[0] * (n + 1) for n in range(n_max + 1)] for _ in range(2)]
    visited = 0
    for steps, height, parity in _walk(direction, n_max):
        tallies[parity][len(steps)][height] += 1
        visited += 1
    log.debug('oracle %s n_max=%d visited %d paths', direction.name, n_max, visited)

    first, second = _FAMILIES[direction]
    return CountTable(first, n_max, tallies[0]), CountTable(second, n_max, tallies[1])
