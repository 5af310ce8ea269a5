__all__ = [
    "FamilySpec",
    "KINDS",
]

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from topzdd.ZddStore import ZddStore, read_family
from topzdd.families import generators
from topzdd.families.graphs import Edge, complete_graph, grid_graph, read_edge_list
from topzdd.utils.errors import ParseError

logger = logging.getLogger(__name__)

# accepted keys per kind, in canonical order; path-like keys keep strings
KINDS: Dict[str, Tuple[str, ...]] = {
    "powerset": ("A",),
    "bounded_range": ("A", "B"),
    "bounded_card": ("A", "B"),
    "knapsack": ("A", "W", "C", "seed"),
    "matchings": ("complete", "grid", "graph"),
    "grid_paths": ("n",),
    "nqueens": ("n",),
    "file": ("path",),
}
_STRING_KEYS = ("graph", "path")


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of a benchmark set family.

    The text form is ``kind:key=value,...``, for example
    ``knapsack:A=100,W=100,C=500,seed=7``, ``matchings:grid=4`` or
    ``file:path=family.txt``. :meth:`parse` validates the parameters of the
    kind and ``str(spec)`` gives them back in canonical order, so that
    ``FamilySpec.parse(str(spec)) == spec``.

    Parameters
    ----------
    kind : :obj:`str`
        One of ``powerset``, ``bounded_range``, ``bounded_card``,
        ``knapsack``, ``matchings``, ``grid_paths``, ``nqueens``, ``file``
    params : :obj:`dict`
        Integer parameters, ``graph`` and ``path`` are strings

    """
    kind: str
    params: Dict[str, Union[int, str]] = field(default_factory=dict)

    def __post_init__(self):
        self._validate()

    def __hash__(self):
        return hash(str(self))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        text = text.strip()
        kind, _, body = text.partition(":")
        if kind not in KINDS:
            raise ParseError(f"unknown family kind {kind!r}, choose from {sorted(KINDS)}")
        params: Dict[str, Union[int, str]] = {}
        for item in filter(None, body.split(",")):
            key, sep, value = item.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or not key:
                raise ParseError(f"{text!r}: expected key=value, got {item!r}")
            if key in params:
                raise ParseError(f"{text!r}: parameter {key} given twice")
            if key in _STRING_KEYS:
                params[key] = value
            else:
                try:
                    params[key] = int(value)
                except ValueError:
                    raise ParseError(f"{text!r}: {key} must be an integer") from None
        return cls(kind, params)

    def __str__(self) -> str:
        body = ",".join(f"{k}={self.params[k]}" for k in KINDS[self.kind]
                        if k in self.params)
        return f"{self.kind}:{body}"

    def _validate(self):
        allowed = KINDS.get(self.kind)
        if allowed is None:
            raise ParseError(f"unknown family kind {self.kind!r}")
        unknown = set(self.params) - set(allowed)
        if unknown:
            raise ParseError(f"{self.kind} does not take {sorted(unknown)}")
        p = self.params
        if self.kind == "matchings":
            if len(p) != 1:
                raise ParseError("matchings needs exactly one of complete=, grid=, graph=")
            if "graph" not in p and p.get("complete", p.get("grid")) < 1:
                raise ParseError("matchings graph size must be >= 1")
            return
        missing = [k for k in allowed if k not in p]
        if missing:
            raise ParseError(f"{self.kind} is missing {missing}")
        if self.kind == "file":
            return
        if "A" in p and p["A"] < 1:
            raise ParseError(f"{self.kind} needs A >= 1")
        if "B" in p and p["B"] < 0:
            raise ParseError(f"{self.kind} needs B >= 0")
        if self.kind == "bounded_range" and p["B"] >= p["A"]:
            raise ParseError("bounded_range needs B < A")
        if self.kind == "bounded_card" and p["B"] > p["A"]:
            raise ParseError("bounded_card needs B <= A")
        if self.kind == "knapsack" and (p["W"] < 1 or p["C"] < 0):
            raise ParseError("knapsack needs W >= 1 and C >= 0")
        if "n" in p and p["n"] < 1:
            raise ParseError(f"{self.kind} needs n >= 1")

    def edges(self) -> List[Edge]:
        """Graph of a ``matchings`` family"""
        if self.kind != "matchings":
            raise ValueError(f"{self.kind} family has no graph")
        if "complete" in self.params:
            return complete_graph(self.params["complete"])
        if "grid" in self.params:
            return grid_graph(self.params["grid"])
        return read_edge_list(self.params["graph"])

    def universe(self) -> int:
        """Number of elements ``c`` of the family's universe"""
        p = self.params
        if self.kind in ("powerset", "bounded_range", "bounded_card", "knapsack"):
            return p["A"]
        if self.kind == "matchings":
            return len(self.edges())
        if self.kind == "grid_paths":
            return 2 * p["n"] * (p["n"] - 1)
        if self.kind == "nqueens":
            return p["n"] ** 2
        header = Path(p["path"]).read_text().split("\n", 1)[0].strip()
        if not header.startswith("c="):
            raise ParseError(f"{p['path']}: missing 'c=<universe>' header")
        return int(header[2:])

    def build(self, store: Optional[ZddStore] = None) -> Tuple[ZddStore, int]:
        """Construct the family.

        Parameters
        ----------
        store : :obj:`topzdd.ZddStore`, optional
            Store to build into, a new store over :meth:`universe` elements
            when not given

        Returns
        -------
        store : :obj:`topzdd.ZddStore`
            Store holding the family
        root : :obj:`int`
            Root handle

        """
        p = self.params
        if self.kind == "file" and store is None:
            store, root = read_family(p["path"])
            logger.info("%s: %d nodes", self, store.node_count(root))
            return store, root
        c = self.universe()
        if store is None:
            store = ZddStore(c)
        elif store.c < c:
            raise ValueError(f"store universe {store.c} smaller than {c} needed by {self}")
        if self.kind == "powerset":
            root = generators.gen_powerset(store, p["A"])
        elif self.kind == "bounded_range":
            root = generators.gen_bounded_range(store, p["A"], p["B"])
        elif self.kind == "bounded_card":
            root = generators.gen_bounded_card(store, p["A"], p["B"])
        elif self.kind == "knapsack":
            root = generators.gen_knapsack(store, p["A"], p["W"], p["C"], p["seed"])
        elif self.kind == "matchings":
            root = generators.gen_matchings(store, self.edges())
        elif self.kind == "grid_paths":
            root = generators.gen_grid_paths(store, p["n"])
        elif self.kind == "nqueens":
            root = generators.gen_nqueens(store, p["n"])
        else:
            other, other_root = read_family(p["path"])
            root = store.from_sets(other.enumerate(other_root))
        logger.info("%s: %d nodes", self, store.node_count(root))
        return store, root
