"""fogmetry features - window fusion into the 43-value feature vector (data in, features out)."""
from .dataset import (
    FeatureDataset,
    FeatureVector,
    featurize,
    featurize_all,
    features_to_csv,
    read_features,
    write_features,
)
from .extractors import (
    DEFAULT_PEAK_THRESHOLD,
    FEATURE_NAMES,
    N_BINS,
    N_FEATURES,
    avg_resultant,
    axis_avg_abs_diff,
    axis_mean,
    axis_std,
    binned_distribution,
    featurize_values,
    time_between_peaks,
)

__all__ = [
    'DEFAULT_PEAK_THRESHOLD',
    'FEATURE_NAMES',
    'N_BINS',
    'N_FEATURES',
    'FeatureDataset',
    'FeatureVector',
    'avg_resultant',
    'axis_avg_abs_diff',
    'axis_mean',
    'axis_std',
    'binned_distribution',
    'featurize',
    'featurize_all',
    'featurize_values',
    'features_to_csv',
    'read_features',
    'time_between_peaks',
    'write_features',
]
