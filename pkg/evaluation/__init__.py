"""fogmetry evaluation - stratified cross-validation and confusion matrices."""
from .cross_validation import (
    EvalReport,
    FoldAssignment,
    confusion_matrix,
    cross_validate,
    stratified_kfold,
)

__all__ = ['EvalReport', 'FoldAssignment', 'confusion_matrix', 'cross_validate', 'stratified_kfold']
