"""scikit-learn style front ends for the selection engine and the MaxMin baseline."""

from itertools import chain, islice

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import CountingStream, check_int, check_stream, infer_kind
from .base import SelectionConfig, initialize_memory, run_selection
from .numeric import VarianceDiversity
from .oracle import brute_force_best_swap, maxmin_select
from .sampling import optimal_k
from .strings import EditDistanceDiversity

MEASURES = {"numeric": VarianceDiversity, "string": EditDistanceDiversity}


def make_measure(measure, first_element=None):
    """Resolve ``"auto"``, a kind name, or a measure instance to a fresh measure."""
    if measure == "auto":
        if first_element is None:
            raise ValueError("cannot infer the measure without an element")
        measure = infer_kind(first_element)
    if isinstance(measure, str):
        try:
            return MEASURES[measure]()
        except KeyError:
            raise ValueError(f"unknown measure {measure!r}") from None
    return measure


class StreamDiversifier(BaseEstimator):
    """Diversify an m-element result set with one pass over a stream.

    ``fit`` fills the buffer with the first ``m`` distinct elements, scores
    the next ``k`` elements to set a threshold, and swaps in the first later
    element whose diversity gain beats it (or the ``n``-th element).

    Parameters
    ----------
    m : int
        Buffer size.
    k : int or None
        Scan length.  ``None`` picks the integer near ``n / e`` that
        maximizes the success-probability lower bound.
    n : int or None
        Elements read after initialization.  ``None`` requires a sized input
        and uses everything left after initialization.
    measure : {"auto", "numeric", "string"} or DiversityMeasure
    skip_nonimproving_final : bool
        Leave the buffer unchanged instead of forcing a final swap that does
        not increase diversity.
    verify : bool
        Keep the window and compare against the brute-force best swap.
        This materializes the window, so it is for testing only.

    Attributes
    ----------
    outcome_ : SelectionOutcome
    initial_set_, result_set_ : list
    pdg_, dir_ : float
    verdict_ : OracleVerdict or None
    reads_ : int
        Stream elements consumed in total.
    """

    def __init__(self, m=10, k=None, n=None, measure="auto",
                 skip_nonimproving_final=False, verify=False):
        self.m = m
        self.k = k
        self.n = n
        self.measure = measure
        self.skip_nonimproving_final = skip_nonimproving_final
        self.verify = verify

    def fit(self, X, y=None):
        m = check_int(self.m, "m", min_val=2)
        total = len(X) if hasattr(X, "__len__") else None
        if self.n is None and total is None:
            raise ValueError("n is required when X has no length")

        stream = CountingStream(X)
        seen = []
        head = iter([])
        if self.measure == "auto":
            try:
                first = next(stream)
            except StopIteration:
                first = None
            seen = [first] if first is not None else []
            head = iter(seen)
        measure = make_measure(self.measure, seen[0] if seen else None)

        source = chain(head, stream)
        buffer = initialize_memory(source, m, measure)
        n = self.n if self.n is not None else total - buffer.init_reads
        k = self.k if self.k is not None else optimal_k(max(n, 3))[0]
        config = SelectionConfig(m, k, n)

        self.initial_set_ = list(buffer.slots)
        window = None
        if self.verify:
            window = list(islice(source, n))
            initial = buffer.copy(measure)
            source = iter(window)

        self.outcome_ = run_selection(
            source, config, measure, buffer,
            skip_nonimproving_final=self.skip_nonimproving_final,
        )
        self.verdict_ = (
            brute_force_best_swap(window, initial, measure, self.outcome_) if self.verify else None
        )
        self.measure_ = measure
        self.buffer_ = buffer
        self.result_set_ = list(buffer.slots)
        self.pdg_ = self.outcome_.pdg
        self.dir_ = self.outcome_.dir
        self.k_, self.n_ = k, n
        self.reads_ = stream.reads
        return self

    def fit_transform(self, X, y=None):
        return self.fit(X).transform()

    def transform(self, X=None):
        """The diversified result set learned by ``fit``; ``X`` is ignored."""
        check_is_fitted(self, "result_set_")
        return np.asarray(self.result_set_, dtype=object if self.measure_.kind == "string" else float)

    def score(self, X=None, y=None):
        """Diversity increasing rate of the executed replacement."""
        check_is_fitted(self, "dir_")
        return self.dir_


class MaxMinSelector(BaseEstimator):
    """Greedy max-min dispersion baseline.

    Parameters
    ----------
    m : int
        Number of elements to select.
    metric : {"auto", "absolute", "edit"} or callable
    """

    def __init__(self, m=10, metric="auto"):
        self.m = m
        self.metric = metric

    def fit(self, X, y=None):
        data = list(check_stream(X))
        m = check_int(self.m, "m", min_val=2)
        self.selected_indices_ = maxmin_select(data, m, self.metric)
        self.selected_ = [data[i] for i in self.selected_indices_]
        return self

    def transform(self, X=None):
        check_is_fitted(self, "selected_")
        return np.asarray(self.selected_, dtype=object if isinstance(self.selected_[0], str) else float)

    def fit_transform(self, X, y=None):
        return self.fit(X).transform()
