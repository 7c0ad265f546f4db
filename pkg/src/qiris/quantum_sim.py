"""Minimal statevector simulator for the bucket membership search.

States are plain complex vectors of power-of-two length. The search is run
as direct vector reflections: a phase oracle negates the target amplitude
and the diffusion step reflects about the prepared superposition, which is
equivalent to the circuit formulation up to a global phase. Measurement is
a deterministic inverse-CDF sampler over the SplitMix64 stream.
"""

import math
from dataclasses import dataclass

import numpy as np

from .prng import unit_floats

DEFAULT_DIMENSION = 16
DEFAULT_SHOTS = 1024


@dataclass(frozen=True)
class GroverOutcome:
    """Shot counts and the majority decision for one search."""

    counts: dict
    shots: int
    iterations: int
    target: int
    decision: bool


def prepare_state(marked, dimension: int = DEFAULT_DIMENSION) -> np.ndarray:
    """Unit statevector with amplitude 1/sqrt(m) on each of the m marked indices.

    Equivalent to writing a 0/1 mask over the basis states and dividing by
    its Frobenius norm.
    """
    indices = sorted(set(marked))
    if not indices:
        raise ValueError("marked set is empty")
    if dimension < 1 or dimension & (dimension - 1):
        raise ValueError(f"dimension must be a power of two, got {dimension}")
    if indices[0] < 0 or indices[-1] >= dimension:
        raise ValueError(f"marked index out of range for dimension {dimension}")
    amps = np.zeros(dimension, dtype=np.complex128)
    amps[indices] = 1.0 / math.sqrt(len(indices))
    return amps


def apply_oracle(state: np.ndarray, target: int) -> np.ndarray:
    """Phase oracle: negate the amplitude at `target`, fix all others."""
    if not 0 <= target < state.shape[0]:
        raise ValueError(f"target {target} out of range for dimension {state.shape[0]}")
    out = state.copy()
    out[target] = -out[target]
    return out


def reflect_about(state: np.ndarray, axis: np.ndarray) -> np.ndarray:
    """Reflect `state` about the unit vector `axis`: 2<axis|state>axis - state."""
    if state.shape != axis.shape:
        raise ValueError(f"dimension mismatch: {state.shape} vs {axis.shape}")
    return 2.0 * np.vdot(axis, state) * axis - state


def grover_iterations(m: int) -> int:
    """Iteration count floor(pi/4 * sqrt(m)) for an m-element search space."""
    if m < 1:
        raise ValueError("search space must have at least one element")
    return math.floor(math.pi / 4.0 * math.sqrt(m))


def basis_bitstring(index: int, dimension: int = DEFAULT_DIMENSION) -> str:
    """Render a basis-state index as a bitstring, qubit 0 (LSB) first.

    Diagnostic convention for dumping counts; the simulation itself is
    index-based and endianness-free.
    """
    qubits = dimension.bit_length() - 1
    if dimension < 2 or dimension & (dimension - 1):
        raise ValueError(f"dimension must be a power of two, got {dimension}")
    if not 0 <= index < dimension:
        raise ValueError(f"index {index} out of range for dimension {dimension}")
    return format(index, f"0{qubits}b")[::-1]


def measure(state: np.ndarray, shots: int, rng_seed: int) -> dict:
    """Draw `shots` samples from P(i) = |amplitude_i|^2.

    Each sample u in [0, 1) from the SplitMix64 stream for `rng_seed` selects
    the first index whose cumulative probability strictly exceeds u, so
    zero-probability indices can never be hit. Returns a map holding only
    the indices that received at least one shot; values sum to `shots`.
    """
    if shots < 1:
        raise ValueError("shots must be positive")
    probs = np.abs(state) ** 2
    cdf = np.cumsum(probs)
    u = unit_floats(rng_seed, shots)
    idx = np.searchsorted(cdf, u, side="right")
    overflow = idx >= probs.shape[0]
    if overflow.any():
        # cdf[-1] can land a hair under 1.0; fold the sliver into the last
        # index that carries probability mass
        idx[overflow] = int(np.flatnonzero(probs > 0.0)[-1])
    binned = np.bincount(idx, minlength=probs.shape[0])
    return {int(i): int(c) for i, c in enumerate(binned) if c}


def grover_search(
    marked,
    target: int,
    dimension: int = DEFAULT_DIMENSION,
    shots: int = DEFAULT_SHOTS,
    *,
    rng_seed: int,
) -> GroverOutcome:
    """Decide whether `target` is one of the `marked` basis states.

    Prepares the uniform superposition over the deduplicated marked set,
    applies floor(pi/4*sqrt(m)) oracle+reflection rounds, samples `shots`
    measurements, and accepts iff the target's count strictly exceeds
    shots // 2 (512 of 1024 by default). A target outside the marked set
    keeps amplitude 0 throughout and is always rejected.
    """
    members = set(marked)
    if not 0 <= target < dimension:
        raise ValueError(f"target {target} out of range for dimension {dimension}")
    prepared = prepare_state(members, dimension)
    iterations = grover_iterations(len(members))
    state = prepared
    for _ in range(iterations):
        state = reflect_about(apply_oracle(state, target), prepared)
    counts = measure(state, shots, rng_seed)
    decision = counts.get(target, 0) > shots // 2
    return GroverOutcome(
        counts=counts,
        shots=shots,
        iterations=iterations,
        target=target,
        decision=decision,
    )
