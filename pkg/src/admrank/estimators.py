"""scikit-learn style wrappers around the rank and label engines."""

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .labels import label_set
from .rank import rank_profile
from .realroots import RealStructure
from .validation import check_forms


class RankTransformer(TransformerMixin, BaseEstimator):
    """Map forms to ``[border, cactus, complex, admissible]`` rank columns."""

    def __init__(self, structure="standard"):
        self.structure = structure

    def fit(self, X, y=None):
        forms = check_forms(X)
        self.structure_ = RealStructure.parse(self.structure)
        self.degrees_ = sorted({f.degree for f in forms})
        self.n_features_in_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "structure_")
        rows = []
        for f in check_forms(X):
            prof = rank_profile(f)
            adm = label_set(f, self.structure_).rank if self.structure_ is not RealStructure.STANDARD else prof.admissible_rank
            rows.append([prof.border_rank, prof.cactus_rank, prof.complex_rank, adm])
        return np.array(rows, dtype=int)

    def get_feature_names_out(self, input_features=None):
        return np.array(["border_rank", "cactus_rank", "complex_rank", "admissible_rank"], dtype=object)


class LabelSetClassifier(ClassifierMixin, BaseEstimator):
    """Predict the label-set key of each form.

    Prediction is an exact computation; ``fit`` only records the label sets
    seen in the training forms and their frequencies.
    """

    def __init__(self, structure="standard", seed=0, n_random=32):
        self.structure = structure
        self.seed = seed
        self.n_random = n_random

    def _keys(self, forms):
        structure = RealStructure.parse(self.structure)
        return [label_set(f, structure, seed=self.seed, n_random=self.n_random).key for f in forms]

    def fit(self, X, y=None):
        keys = self._keys(check_forms(X))
        self.classes_, counts = np.unique(np.array(keys, dtype=object), return_counts=True)
        self.label_frequencies_ = {k: c / len(keys) for k, c in zip(self.classes_, counts)}
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        check_is_fitted(self, "classes_")
        return np.array(self._keys(check_forms(X)), dtype=object)
