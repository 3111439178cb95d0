from evaluation.base import EvalReport, Partition, read_partition, write_partition, write_report_csv
from evaluation.modularity import modularity
from evaluation.scoring import score_against

__all__ = [
    "EvalReport",
    "Partition",
    "modularity",
    "read_partition",
    "score_against",
    "write_partition",
    "write_report_csv",
]
