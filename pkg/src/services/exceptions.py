class HyperspanError(Exception):
    pass


# ---- Hypergraph model ----
class HypergraphError(HyperspanError):
    """Validation error. `edge` is the index of the offending edge when there is one."""
    def __init__(self, message: str, edge: int | None = None):
        super().__init__(message)
        self.edge = edge


class InvalidUniformity(HypergraphError):
    pass


class NonUniformEdge(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class InvalidWeight(HypergraphError):
    pass


class NegativeWeight(InvalidWeight):
    pass


class NonFiniteWeight(InvalidWeight):
    pass


class WeightCountMismatch(HypergraphError):
    pass


class InvalidLabel(HypergraphError):
    pass


class DuplicateLabel(HypergraphError):
    pass


class UnknownEdge(HypergraphError):
    pass


class UnknownLabel(HypergraphError):
    pass


class EmptySubset(HypergraphError):
    pass


class EdgeAlreadyInSubset(HypergraphError):
    pass


# ---- Matching and flow ----
class MatchingError(HyperspanError):
    pass


class RemovedVertexNotInGraph(MatchingError):
    pass


class InvalidFlowNetwork(MatchingError):
    pass


# ---- Exhaustive oracles and generators ----
class OracleError(HyperspanError):
    pass


class SubsetTooLargeForExhaustiveOracle(OracleError):
    pass


class TooLarge(OracleError):
    pass


class NotTwoUniform(OracleError):
    pass


class InfeasibleConfig(OracleError):
    pass


class InconsistentBases(OracleError):
    pass


# ---- Decomposition ----
class DecompositionError(HyperspanError):
    pass


class EdgeNotInForest(DecompositionError):
    pass


class NotIndependent(DecompositionError):
    pass


class LinkAmbiguity(DecompositionError):
    pass


class ComponentsNotComputed(DecompositionError):
    pass


class InconsistentDecomposition(DecompositionError):
    pass
