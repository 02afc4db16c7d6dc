# svm.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#

'''
Binary soft-margin SVM with an RBF kernel, trained with sequential minimal
optimization on the dual problem

    max  sum(a) - 1/2 sum_ij a_i a_j y_i y_j K(x_i, x_j)
    s.t. 0 <= a_i <= C,  sum_i a_i y_i = 0

Each step takes the maximal violating pair: the first multiplier is the
worst KKT violator, the second the one maximising |E_1 - E_2|, where
E_i = f(x_i) - b - y_i is kept in an error cache. The kernel matrix of the
training set is computed once and kept whole.
'''

import math
from collections import namedtuple

import numpy as np

from leadership_styles.errors import ConvergenceError, DimensionError, \
    SingleClassError, TrainingError
from leadership_styles.features import to_csr
from leadership_styles.logging import logger

# smallest curvature used along a pair direction (duplicate points)
MIN_CURVATURE = 1e-12


class KernelParams(namedtuple("KernelParams", ["gamma"])):
    __slots__ = ()

    def __new__(cls, gamma):
        if not gamma > 0:
            raise ValueError("gamma must be positive, got {}".format(gamma))
        return super(KernelParams, cls).__new__(cls, float(gamma))


class TrainConfig(namedtuple("TrainConfig", [
        "c", "gamma", "tol", "eps", "max_passes", "seed", "check_objective"])):
    """
    Solver settings.

    Attributes:
        c (float): box constraint C
        gamma (float): RBF gamma
        tol (float): KKT tolerance; the solver stops when the largest
            violating pair is closer than tol
        eps (float): multipliers closer than eps to a bound are snapped to it
        max_passes (int): the solver gives up after max_passes * n steps
        seed (int): kept for reproducible sweeps; the pair selection is
            deterministic given the dataset order
        check_objective (bool): assert that the dual objective never decreases
    """

    __slots__ = ()

    def __new__(cls, c, gamma, tol=1e-3, eps=1e-12, max_passes=10000, seed=0,
                check_objective=False):
        if not c > 0:
            raise ValueError("C must be positive, got {}".format(c))
        if not tol > 0:
            raise ValueError("tol must be positive, got {}".format(tol))
        if not eps > 0:
            raise ValueError("eps must be positive, got {}".format(eps))
        KernelParams(gamma)
        return super(TrainConfig, cls).__new__(
            cls, float(c), float(gamma), float(tol), float(eps),
            int(max_passes), int(seed), bool(check_objective)
        )


SmoResult = namedtuple(
    "SmoResult", ["alpha", "bias", "iterations", "objective", "gap"]
)


class BinarySvmModel(object):
    """
    A trained binary classifier.

    Args:
        support_vectors (list of SparseVector)
        dual_coefs (sequence): a_i * y_i for each support vector
        bias (float)
        kernel (KernelParams)
        c (float): the C it was trained with
        dim (int): the feature dimension
    """

    def __init__(self, support_vectors, dual_coefs, bias, kernel, c, dim):
        self.support_vectors = list(support_vectors)
        self.dual_coefs = np.asarray(dual_coefs, dtype=np.float64)
        self.bias = float(bias)
        self.kernel = kernel
        self.c = float(c)
        self.dim = int(dim)

        if len(self.support_vectors) != len(self.dual_coefs):
            raise ValueError("one dual coefficient per support vector expected")
        for vector in self.support_vectors:
            if vector.dim != self.dim:
                raise DimensionError(vector.dim, self.dim)

        self._sv_matrix = None
        self._sv_squared_norms = None

    def _support_matrix(self):
        if self._sv_matrix is None:
            self._sv_matrix = to_csr(self.support_vectors, self.dim)
            self._sv_squared_norms = np.array(
                [_squared_norm(v) for v in self.support_vectors]
            )
        return self._sv_matrix, self._sv_squared_norms

    def __eq__(self, other):
        return isinstance(other, BinarySvmModel) and \
            self.support_vectors == other.support_vectors and \
            np.array_equal(self.dual_coefs, other.dual_coefs) and \
            self.bias == other.bias and self.kernel == other.kernel and \
            self.c == other.c and self.dim == other.dim

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "BinarySvmModel(n_support={}, C={}, gamma={}, bias={})".format(
            len(self.support_vectors), self.c, self.kernel.gamma, self.bias
        )


def _squared_norm(vector):
    return math.fsum(vector.values * vector.values)


def squared_distance(x, y):
    """ ||x - y||^2, computed on the union of the two supports. """

    if x.dim != y.dim:
        raise DimensionError(x.dim, y.dim)

    support = np.union1d(x.indices, y.indices)
    diff = np.zeros(len(support))
    diff[np.searchsorted(support, x.indices)] += x.values
    diff[np.searchsorted(support, y.indices)] -= y.values
    return math.fsum(diff * diff)


def rbf_kernel(x, y, kernel):
    """
    exp(-gamma * ||x - y||^2)

    Raises:
        DimensionError: x and y have different dimensions
    """

    return math.exp(-kernel.gamma * squared_distance(x, y))


def squared_distances(vectors):
    """
    All pairwise squared distances of a list of vectors, using
    ||x||^2 + ||y||^2 - 2<x, y> on the sparse Gram matrix.

    Returns:
        numpy.ndarray: n x n, symmetric, zero diagonal
    """

    if not vectors:
        return np.zeros((0, 0))

    matrix = to_csr(vectors)
    gram = (matrix @ matrix.T).toarray()
    norms = np.diag(gram).copy()
    distances = norms[:, None] + norms[None, :] - 2.0 * gram
    np.maximum(distances, 0.0, out=distances)
    np.fill_diagonal(distances, 0.0)
    return distances


def kernel_matrix(vectors, gamma, distances=None):
    if distances is None:
        distances = squared_distances(vectors)
    return np.exp(-gamma * distances)


def _check_labels(y):
    y = np.asarray(y, dtype=np.float64)
    if not np.all((y == 1.0) | (y == -1.0)):
        raise TrainingError("labels must be +1 or -1")
    if len(y) < 2:
        raise TrainingError("at least two training points are needed")
    if np.all(y == 1.0) or np.all(y == -1.0):
        raise SingleClassError("both classes must be present in the training set")
    return y


def dual_objective(alpha, y, errors):
    # with E_i = sum_j a_j y_j K_ij - y_i, a'Qa = sum_i a_i (y_i E_i + 1)
    return 0.5 * float(np.sum(alpha)) - 0.5 * float(np.dot(alpha * y, errors))


def _bias(alpha, y, errors, c):
    free = (alpha > 0) & (alpha < c)
    if np.any(free):
        return float(np.mean(-errors[free]))

    # no free multiplier: middle of the interval the KKT conditions allow
    at_zero = alpha == 0
    at_c = alpha == c
    lower = (at_zero & (y > 0)) | (at_c & (y < 0))
    upper = (at_zero & (y < 0)) | (at_c & (y > 0))

    lb = float(np.max(-errors[lower])) if np.any(lower) else None
    ub = float(np.min(-errors[upper])) if np.any(upper) else None
    if lb is None:
        return ub
    if ub is None:
        return lb
    return (lb + ub) / 2.0


def solve_smo(K, y, cfg):
    """
    Solve the dual problem on a precomputed kernel matrix.

    Args:
        K (numpy.ndarray): n x n kernel matrix
        y (sequence): labels, +1 or -1
        cfg (TrainConfig)

    Returns:
        SmoResult: all n multipliers, the bias, the number of steps, the
            dual objective and the final violation gap

    Raises:
        SingleClassError: only one class in y
        ConvergenceError: no convergence within max_passes * n steps
    """

    y = _check_labels(y)
    n = len(y)
    c = cfg.c

    alpha = np.zeros(n)
    errors = -y.copy()
    positive = y > 0
    negative = ~positive

    max_iterations = cfg.max_passes * n
    objective = 0.0
    iterations = 0

    while True:
        below_c = alpha < c
        above_zero = alpha > 0
        up = (positive & below_c) | (negative & above_zero)
        low = (positive & above_zero) | (negative & below_c)

        i = int(np.argmin(np.where(up, errors, np.inf)))
        j = int(np.argmax(np.where(low, errors, -np.inf)))
        gap = float(errors[j] - errors[i])

        if not (up[i] and low[j]) or gap <= cfg.tol:
            break

        if iterations >= max_iterations:
            raise ConvergenceError(
                "SMO did not converge", iterations, gap,
                dual_objective(alpha, y, errors)
            )

        yi, yj = y[i], y[j]
        ai, aj = alpha[i], alpha[j]

        if yi != yj:
            lower, upper = max(0.0, aj - ai), min(c, c + aj - ai)
        else:
            lower, upper = max(0.0, ai + aj - c), min(c, ai + aj)

        eta = max(K[i, i] + K[j, j] - 2.0 * K[i, j], MIN_CURVATURE)
        aj_new = min(max(aj + yj * (errors[i] - errors[j]) / eta, lower), upper)
        aj_new = _snap(aj_new, c, cfg.eps)
        ai_new = _snap(ai + yi * yj * (aj - aj_new), c, cfg.eps)

        if aj_new == aj and ai_new == ai:
            raise ConvergenceError(
                "SMO step made no progress", iterations, gap,
                dual_objective(alpha, y, errors)
            )

        errors += (ai_new - ai) * yi * K[i] + (aj_new - aj) * yj * K[j]
        alpha[i], alpha[j] = ai_new, aj_new
        iterations += 1

        if cfg.check_objective:
            new_objective = dual_objective(alpha, y, errors)
            if new_objective < objective - 1e-9 * max(1.0, abs(objective)):
                raise AssertionError(
                    "dual objective decreased from {} to {} at step {}".format(
                        objective, new_objective, iterations)
                )
            objective = new_objective

    objective = dual_objective(alpha, y, errors)
    bias = _bias(alpha, y, errors, c)
    logger.debug("SMO finished: {} steps, gap {:.3g}, objective {:.6g}".format(
        iterations, gap, objective
    ))

    return SmoResult(alpha, bias, iterations, objective, gap)


def _snap(value, c, eps):
    if value < eps:
        return 0.0
    if value > c - eps:
        return c
    return value


def model_from_solution(vectors, y, result, cfg, dim):
    y = np.asarray(y, dtype=np.float64)
    support = np.flatnonzero(result.alpha > 0)

    return BinarySvmModel(
        [vectors[i] for i in support],
        result.alpha[support] * y[support],
        result.bias,
        KernelParams(cfg.gamma),
        cfg.c,
        dim,
    )


def train_binary_svm(vectors, y, cfg, kernel=None):
    """
    Train a binary RBF SVM.

    Args:
        vectors (list of SparseVector): training points
        y (sequence): labels, +1 or -1
        cfg (TrainConfig)
        kernel (numpy.ndarray): optional precomputed kernel matrix for
            vectors with cfg.gamma

    Returns:
        BinarySvmModel: only the support vectors (a_i > 0) are kept

    Raises:
        SingleClassError, ConvergenceError, TrainingError
    """

    if len(vectors) != len(y):
        raise TrainingError("{} vectors but {} labels".format(len(vectors), len(y)))
    if not vectors:
        raise TrainingError("at least two training points are needed")

    dim = vectors[0].dim
    for vector in vectors:
        if vector.dim != dim:
            raise DimensionError(vector.dim, dim)

    if kernel is None:
        kernel = kernel_matrix(vectors, cfg.gamma)

    result = solve_smo(kernel, y, cfg)
    return model_from_solution(vectors, y, result, cfg, dim)


def decision_values(model, vectors):
    """
    sum_i coef_i K(sv_i, x) + b for each vector.

    The result for a vector does not depend on the other vectors of the
    batch, so batch and single evaluation agree exactly.

    Raises:
        DimensionError: a vector does not match the model dimension
    """

    for vector in vectors:
        if vector.dim != model.dim:
            raise DimensionError(vector.dim, model.dim)

    if not vectors:
        return []
    if not model.support_vectors:
        return [model.bias] * len(vectors)

    sv_matrix, sv_norms = model._support_matrix()
    dots = (to_csr(vectors, model.dim) @ sv_matrix.T).toarray()
    norms = np.array([_squared_norm(v) for v in vectors])

    distances = norms[:, None] + sv_norms[None, :] - 2.0 * dots
    np.maximum(distances, 0.0, out=distances)
    similarities = np.exp(-model.kernel.gamma * distances)

    return [
        math.fsum(row * model.dual_coefs) + model.bias for row in similarities
    ]


def decision_value(model, vector):
    return decision_values(model, [vector])[0]


def predict_binary(model, vector):
    """ True iff the decision value is strictly positive. """

    return decision_value(model, vector) > 0


def predict_many(model, vectors):
    return [value > 0 for value in decision_values(model, vectors)]
