"""Domain types for multi-view texts and patterns.

A multi-view text is k aligned sequences of equal length n, each over its
own alphabet; the alphabets are pairwise disjoint, so every symbol
identifies the view it belongs to.  Patterns mix symbols from any view,
and a pattern symbol constrains only its own view at the aligned position
(the other views are masked there).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

# Dense interned ids.  Symbol ids are unique across all views; view ids
# index the view list.
SymbolId = int
ViewId = int


class MatchingError(Exception):
    """Base class for all domain errors raised by this package."""


class DisjointnessViolation(MatchingError):
    """A token was registered under two views (or twice in one view)."""

    def __init__(self, token: str, view_a: str, view_b: str):
        self.token = token
        self.view_a = view_a
        self.view_b = view_b
        super().__init__(
            f"token {token!r} appears in both view {view_a!r} and view {view_b!r};"
            " view alphabets must be disjoint"
        )


class UnknownSymbol(MatchingError):
    """A pattern token belongs to no registered alphabet."""

    def __init__(self, token: str):
        self.token = token
        super().__init__(f"token {token!r} is not in any registered alphabet")


class EmptyPattern(MatchingError):
    """Patterns must contain at least one symbol."""


class OutOfBounds(MatchingError):
    """A window position outside [0, n - m] was queried."""


class RegistryMismatch(MatchingError):
    """Text and pattern were interned against different registries."""


@dataclass(frozen=True)
class AlphabetRegistry:
    """Interning table for the k disjoint view alphabets.

    Holds the total type function: every registered symbol maps to exactly
    one view and one token string.
    """

    view_names: tuple[str, ...]
    token_to_symbol: dict[str, SymbolId]
    symbol_to_view: tuple[ViewId, ...]
    symbol_to_token: tuple[str, ...]

    @property
    def k(self) -> int:
        return len(self.view_names)

    @property
    def num_symbols(self) -> int:
        return len(self.symbol_to_token)

    def view_of(self, symbol: SymbolId) -> ViewId:
        return self.symbol_to_view[symbol]

    def token_of(self, symbol: SymbolId) -> str:
        return self.symbol_to_token[symbol]

    def symbol_of(self, token: str) -> SymbolId:
        try:
            return self.token_to_symbol[token]
        except KeyError:
            raise UnknownSymbol(token) from None


def build_registry(
    view_names: Sequence[str], view_alphabets: Sequence[Iterable[str]]
) -> AlphabetRegistry:
    """Intern the view alphabets, assigning dense symbol ids in order.

    ``view_alphabets`` is iterated in the given order, so pass ordered
    collections when id assignment must be reproducible.  Raises
    DisjointnessViolation if any token occurs under two views (or twice in
    the same view).
    """
    if len(view_names) != len(view_alphabets):
        raise ValueError("view_names and view_alphabets must have equal length")
    if len(view_names) < 1:
        raise ValueError("at least one view is required")

    token_to_symbol: dict[str, SymbolId] = {}
    symbol_to_view: list[ViewId] = []
    symbol_to_token: list[str] = []
    for view, tokens in enumerate(view_alphabets):
        for token in tokens:
            if token in token_to_symbol:
                prev = symbol_to_view[token_to_symbol[token]]
                raise DisjointnessViolation(token, view_names[prev], view_names[view])
            token_to_symbol[token] = len(symbol_to_token)
            symbol_to_view.append(view)
            symbol_to_token.append(token)

    return AlphabetRegistry(
        view_names=tuple(view_names),
        token_to_symbol=token_to_symbol,
        symbol_to_view=tuple(symbol_to_view),
        symbol_to_token=tuple(symbol_to_token),
    )


@dataclass(frozen=True)
class MultiViewText:
    """k aligned symbol sequences of common length n."""

    views: tuple[tuple[SymbolId, ...], ...]
    registry: AlphabetRegistry = field(repr=False)

    def __post_init__(self):
        if len(self.views) != self.registry.k:
            raise ValueError(
                f"expected {self.registry.k} views, got {len(self.views)}"
            )
        lengths = {len(v) for v in self.views}
        if len(lengths) > 1:
            raise ValueError(f"views have unequal lengths: {sorted(lengths)}")

    @property
    def n(self) -> int:
        return len(self.views[0])

    def check_symbol_typing(self) -> None:
        """Verify every symbol sits in the view whose sequence holds it.

        O(k*n); not run on construction so that bulk generation stays cheap.
        """
        view_of = self.registry.symbol_to_view
        for v, seq in enumerate(self.views):
            for sym in seq:
                if view_of[sym] != v:
                    raise ValueError(
                        f"symbol {sym} (view {view_of[sym]}) stored in view {v}"
                    )


def make_text(
    rows: Sequence[Sequence[SymbolId]], registry: AlphabetRegistry
) -> MultiViewText:
    return MultiViewText(tuple(tuple(r) for r in rows), registry)


@dataclass(frozen=True)
class Pattern:
    """A resolved pattern: symbol ids plus the registry that interned them."""

    symbols: tuple[SymbolId, ...]
    registry: AlphabetRegistry = field(repr=False)

    def __post_init__(self):
        if len(self.symbols) == 0:
            raise EmptyPattern("pattern must contain at least one symbol")

    @property
    def m(self) -> int:
        return len(self.symbols)

    def views(self) -> tuple[ViewId, ...]:
        """The view of each pattern position."""
        view_of = self.registry.symbol_to_view
        return tuple(view_of[s] for s in self.symbols)

    def tokens(self) -> tuple[str, ...]:
        token_of = self.registry.symbol_to_token
        return tuple(token_of[s] for s in self.symbols)


def resolve_pattern(tokens: Sequence[str], registry: AlphabetRegistry) -> Pattern:
    """Map token strings to a Pattern; unknown tokens are an error."""
    if len(tokens) == 0:
        raise EmptyPattern("pattern must contain at least one token")
    return Pattern(tuple(registry.symbol_of(t) for t in tokens), registry)


def occurs_at(text: MultiViewText, pattern: Pattern, i: int) -> bool:
    """Ground-truth occurrence predicate at 0-based window position i.

    True iff every pattern symbol equals the text symbol of its own view at
    the aligned position; the other views are ignored there.
    """
    n = text.n
    m = pattern.m
    if i < 0 or i > n - m:
        raise OutOfBounds(f"position {i} outside [0, {n - m}]")
    views = text.views
    view_of = text.registry.symbol_to_view
    for j, sym in enumerate(pattern.symbols):
        if views[view_of[sym]][i + j] != sym:
            return False
    return True


def check_same_registry(text: MultiViewText, pattern: Pattern) -> None:
    # Identity check: symbol ids from another registry are meaningless here.
    if text.registry is not pattern.registry:
        raise RegistryMismatch(
            "text and pattern were built against different registries"
        )
