""" テンソル積による状態ベクトルシミュレータ

幾何的な実装 (gates.geometric) の検算用. ゲート記述子以外は共有しない
"""
import logging
import math

import numpy as np

from ..gates.Gate import Gate, GATE_X, GATE_Z, GATE_H
from ..gates.geometric import teleport_network
from .StateVector import StateVector

logger = logging.getLogger(__name__)

_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
_H = (_X + _Z) / math.sqrt(2)
_MATRICES = {GATE_X: _X, GATE_Z: _Z, GATE_H: _H}

# |Φ> = (|00> + |11>)/√2
_BELL_PHI = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2)


def _axis(k, n):
    # C順のreshapeでは最上位ビットが軸0
    return n - k


def _apply_matrix(tensor, matrix, axis):
    moved = np.moveaxis(tensor, axis, 0)
    out = np.tensordot(matrix, moved, axes=([1], [0]))
    return np.moveaxis(out, 0, axis)


def sv_apply_gate(sv, gate):
    """ 2x2行列をビット k の軸に作用させる. 制御付きは制御ビット=1 の部分だけ """
    if gate.max_bit() > sv.dim:
        raise ValueError(f'gate {gate!r} does not fit {sv.dim} qubits')
    n = sv.dim
    matrix = _MATRICES[gate.base_kind]
    psi = sv.as_tensor().copy()
    if gate.control is None:
        psi = _apply_matrix(psi, matrix, _axis(gate.target, n))
    else:
        control_axis = _axis(gate.control, n)
        target_axis = _axis(gate.target, n)
        index = [slice(None)] * n
        index[control_axis] = 1
        index = tuple(index)
        # 制御軸を取り除いた部分テンソルでは target の軸番号がずれる
        if control_axis < target_axis:
            target_axis -= 1
        psi[index] = _apply_matrix(psi[index], matrix, target_axis)
    return StateVector(psi.reshape(-1))


def sv_apply_circuit(circ, sv):
    for gate in circ:
        sv = sv_apply_gate(sv, gate)
    return sv


def sv_teleport_input(alpha, beta):
    """ (alpha|0> + beta|1>)_1 ⊗ |Φ_23>

    np.kron は左の因子が上位ビットになるので, 量子ビット1を右に置く
    """
    return StateVector(np.kron(_BELL_PHI, np.array([alpha, beta], dtype=float)))


def sv_teleport(alpha, beta):
    return sv_apply_circuit(teleport_network(), sv_teleport_input(alpha, beta))


def equivalence_check(mv, sv, atol=1e-12):
    """ 係数と振幅が一致するか. (一致したか, 最大偏差) を返す """
    if mv.dim != sv.dim:
        raise TypeError(f'Cannot compare Cl({mv.dim}) multivector with {sv.dim}-qubit state')
    deviation = float(np.max(np.abs(mv.coeffs - sv.amps)))
    ok = deviation <= atol
    if not ok:
        logger.warning({'action': 'equivalence_check', 'status': 'mismatch',
                        'max_deviation': deviation})
    return ok, deviation
