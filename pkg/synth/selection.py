from __future__ import annotations

import logging
from collections.abc import Sequence
from enum import Enum

import numpy as np

from evaluation.base import Partition
from graphs.base import Graph
from learning.base import LabelSet

logger = logging.getLogger(__name__)


class SelectionRule(str, Enum):
    MIN_DEGREE = "min-degree"
    MAX_DEGREE = "max-degree"
    UNIFORM_RANDOM = "uniform-random"


def extreme_degree_labels(
    g: Graph,
    truth: Partition,
    rules: SelectionRule | Sequence[SelectionRule],
    seed: int = 0,
) -> LabelSet:
    """Pick one labeled node per class according to that class's rule.

    Degree ties go to the lowest node index. The uniform rule for class c
    draws from ``default_rng([seed, c])``.
    """
    if truth.n != g.n:
        raise ValueError(f"Partition has {truth.n} nodes but the graph has {g.n}")
    if isinstance(rules, (SelectionRule, str)):
        rules = [rules] * truth.k
    rules = [SelectionRule(r) for r in rules]
    if len(rules) != truth.k:
        raise ValueError(f"Got {len(rules)} selection rules for {truth.k} classes")

    picks: dict[int, int] = {}
    for c, rule in enumerate(rules):
        members = truth.members(c)
        if not members.size:
            raise ValueError(f"Class {truth.class_name(c)} is empty; cannot select a labeled node")
        degrees = g.degrees[members]
        if rule is SelectionRule.MIN_DEGREE:
            node = members[np.argmin(degrees)]
        elif rule is SelectionRule.MAX_DEGREE:
            node = members[np.argmax(degrees)]
        else:
            node = np.random.default_rng([seed, c]).choice(members)
        picks[int(node)] = c
        logger.debug("Class %s: %s picked node %s (degree %g)", c, rule.value, g.node_ids[node], g.degrees[node])

    return LabelSet(k=truth.k, assignments=picks, class_names=truth.class_names)


def random_labels(truth: Partition, per_class: int, rng: np.random.Generator) -> LabelSet:
    """Draw ``per_class`` nodes uniformly without replacement inside every class."""
    if per_class < 1:
        raise ValueError(f"labels per class must be >= 1, got {per_class}")
    sizes = truth.sizes()
    if per_class > sizes.min():
        smallest = int(np.argmin(sizes))
        raise ValueError(
            f"Cannot draw {per_class} labels per class: class {truth.class_name(smallest)} "
            f"has only {sizes[smallest]} nodes"
        )
    picks: dict[int, int] = {}
    for c in range(truth.k):
        for node in rng.choice(truth.members(c), size=per_class, replace=False):
            picks[int(node)] = c
    return LabelSet(k=truth.k, assignments=picks, class_names=truth.class_names)
