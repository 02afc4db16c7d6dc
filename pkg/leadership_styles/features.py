# features.py
#
# Copyright (C) 2026 Leadership Styles contributors
# License: http://www.gnu.org/licenses/gpl-2.0.txt GNU GPL v2
#
# Vocabulary and IDF weighted binary feature vectors.


import math

import numpy as np
from scipy import sparse

from leadership_styles.errors import VocabularyError


class SparseVector(object):
    """
    A sparse real vector.

    Args:
        indices (sequence): strictly increasing column indices < dim
        values (sequence): the non-zero weights, aligned with indices
        dim (int): the dimension
    """

    __slots__ = ('indices', 'values', 'dim', '_squared_norm')

    def __init__(self, indices, values, dim):
        self.indices = np.asarray(indices, dtype=np.int64)
        self.values = np.asarray(values, dtype=np.float64)
        self.dim = int(dim)
        self._squared_norm = None

        if self.indices.shape != self.values.shape or self.indices.ndim != 1:
            raise ValueError("indices and values must be aligned 1-D sequences")
        if len(self.indices):
            if np.any(np.diff(self.indices) <= 0):
                raise ValueError("indices must be strictly increasing")
            if self.indices[0] < 0 or self.indices[-1] >= self.dim:
                raise ValueError("index out of range for dimension {}".format(dim))
        if np.any(self.values == 0):
            raise ValueError("zero weights must not be stored")

    @classmethod
    def from_dense(cls, values):
        values = np.asarray(values, dtype=np.float64)
        indices = np.flatnonzero(values)
        return cls(indices, values[indices], len(values))

    @property
    def entries(self):
        return list(zip(self.indices.tolist(), self.values.tolist()))

    @property
    def squared_norm(self):
        if self._squared_norm is None:
            self._squared_norm = float(np.dot(self.values, self.values))
        return self._squared_norm

    def dot(self, other):
        _, mine, theirs = np.intersect1d(
            self.indices, other.indices, assume_unique=True, return_indices=True
        )
        return float(np.dot(self.values[mine], other.values[theirs]))

    def to_dense(self):
        dense = np.zeros(self.dim)
        dense[self.indices] = self.values
        return dense

    def __len__(self):
        return len(self.indices)

    def __eq__(self, other):
        return isinstance(other, SparseVector) and self.dim == other.dim and \
            np.array_equal(self.indices, other.indices) and \
            np.array_equal(self.values, other.values)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "SparseVector(dim={}, entries={})".format(self.dim, self.entries)


def to_csr(vectors, dim=None):
    """
    Stack sparse vectors into a CSR matrix, one row per vector.

    Args:
        vectors (list of SparseVector)
        dim (int): number of columns, needed when vectors is empty

    Returns:
        scipy.sparse.csr_matrix
    """

    if dim is None:
        if not vectors:
            raise ValueError("dim is required for an empty vector list")
        dim = vectors[0].dim

    indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
    for i, vector in enumerate(vectors):
        if vector.dim != dim:
            raise ValueError("mixed dimensions {} and {}".format(vector.dim, dim))
        indptr[i + 1] = indptr[i] + len(vector)

    indices = np.concatenate([v.indices for v in vectors]) if vectors \
        else np.zeros(0, dtype=np.int64)
    values = np.concatenate([v.values for v in vectors]) if vectors \
        else np.zeros(0)

    return sparse.csr_matrix((values, indices, indptr), shape=(len(vectors), dim))


class Vocabulary(object):
    """
    The stemmed terms of a training corpus with their document frequencies.

    Args:
        terms (list): (stem, df) pairs in column order
        n_docs (int): size of the training corpus
    """

    def __init__(self, terms, n_docs):
        self.__terms = tuple(stem for stem, _ in terms)
        self.__doc_freq = dict(terms)
        self.__term_index = dict((stem, j) for j, stem in enumerate(self.__terms))
        self.__n_docs = int(n_docs)

        if len(self.__term_index) != len(self.__terms):
            raise VocabularyError("duplicate terms in vocabulary")
        for stem, df in terms:
            if not 1 <= df <= self.__n_docs:
                raise VocabularyError(
                    "document frequency {} of '{}' outside [1, {}]".format(
                        df, stem, self.__n_docs)
                )

        self.__idf = np.array([
            idf_from_counts(self.__n_docs, self.__doc_freq[stem])
            for stem in self.__terms
        ])

    @property
    def terms(self):
        return self.__terms

    @property
    def term_index(self):
        return dict(self.__term_index)

    @property
    def doc_freq(self):
        return dict(self.__doc_freq)

    @property
    def n_docs(self):
        return self.__n_docs

    @property
    def idf(self):
        return self.__idf

    def index_of(self, stem):
        return self.__term_index.get(stem)

    def df(self, stem):
        return self.__doc_freq.get(stem, 0)

    def as_pairs(self):
        return [[stem, self.__doc_freq[stem]] for stem in self.__terms]

    def __len__(self):
        return len(self.__terms)

    def __contains__(self, stem):
        return stem in self.__term_index

    def __eq__(self, other):
        return isinstance(other, Vocabulary) and \
            self.as_pairs() == other.as_pairs() and self.n_docs == other.n_docs

    def __ne__(self, other):
        return not self == other


def build_vocabulary(docs, min_df=1):
    """
    Build the vocabulary of a list of token lists.

    The document frequency counts distinct documents, not occurrences.
    Terms are indexed in lexicographic order; with min_df > 1 rarer terms
    are left out.

    Args:
        docs (list): token lists
        min_df (int): minimum document frequency kept

    Returns:
        Vocabulary

    Raises:
        VocabularyError: docs is empty
    """

    if not docs:
        raise VocabularyError("cannot build a vocabulary from zero documents")

    doc_freq = {}
    for doc in docs:
        for stem in set(doc):
            doc_freq[stem] = doc_freq.get(stem, 0) + 1

    terms = [(stem, doc_freq[stem]) for stem in sorted(doc_freq)
             if doc_freq[stem] >= min_df]
    return Vocabulary(terms, len(docs))


def idf_from_counts(n_docs, df):
    return math.log((1.0 + n_docs) / (1.0 + df)) + 1.0


def idf_weight(term, vocabulary):
    """ ln((1 + N) / (1 + df(t))) + 1, with df = 0 for unknown terms. """

    return idf_from_counts(vocabulary.n_docs, vocabulary.df(term))


def vectorize(doc, vocabulary):
    """
    Binary presence times IDF, then L2 normalised.

    Out of vocabulary stems are ignored and repeated stems count once;
    a document with no known stem gives the zero vector.

    Args:
        doc (list): stems
        vocabulary (Vocabulary)

    Returns:
        SparseVector
    """

    indices = sorted(set(
        j for j in (vocabulary.index_of(stem) for stem in doc) if j is not None
    ))
    values = vocabulary.idf[indices] if indices else np.zeros(0)

    norm = math.sqrt(float(np.dot(values, values)))
    if norm > 0:
        values = values / norm

    return SparseVector(indices, values, len(vocabulary))


def vectorize_many(docs, vocabulary):
    return [vectorize(doc, vocabulary) for doc in docs]
