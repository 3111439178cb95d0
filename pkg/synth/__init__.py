from synth.planted import PlantedPartitionSpec, planted_partition
from synth.selection import SelectionRule, extreme_degree_labels, random_labels

__all__ = [
    "PlantedPartitionSpec",
    "SelectionRule",
    "extreme_degree_labels",
    "planted_partition",
    "random_labels",
]
