""" ゲートを係数の置換と符号反転として実装する

b_k を左からかける実装にはしない (b_2 b_1b_2 = -b_1 のような並べ替え符号が表と合わない)
"""
import logging
import math

import numpy as np

from ..algebra import Multivector, geometric_product, bell_carrier, single_bit
from .Gate import Gate, Circuit, GATE_X, GATE_Z, GATE_H, GATE_CX, GATE_CZ

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2)


def _bit(mv, k):
    if k < 1 or k > mv.dim:
        raise ValueError(f'bit {k} not in range 1 to {mv.dim}')
    return 1 << (k - 1)


def _controlled_bits(mv, k, l):
    target = _bit(mv, k)
    control = _bit(mv, l)
    if k == l:
        raise ValueError(f'control bit equals target bit {k}')
    return target, control


def apply_x(mv, k):
    """ X_k: b_k の有無を反転したブレードと係数を入れ替える """
    words = np.arange(mv.size)
    return Multivector(mv.coeffs[words ^ _bit(mv, k)])


def apply_z(mv, k):
    """ Z_k: b_k を含むブレードの符号を反転 """
    words = np.arange(mv.size)
    return Multivector(np.where(words & _bit(mv, k), -mv.coeffs, mv.coeffs))


def apply_h(mv, k):
    """ H_k = (X_k + Z_k)/√2 """
    bit = _bit(mv, k)
    words = np.arange(mv.size)
    flipped = np.where(words & bit, -mv.coeffs, mv.coeffs)
    return Multivector((mv.coeffs[words ^ bit] + flipped) / SQRT2)


def apply_cx(mv, k, l):
    """ X_k^l: ビット l が立っているブレードだけ b_k を反転 """
    target, control = _controlled_bits(mv, k, l)
    words = np.arange(mv.size)
    source = np.where(words & control, words ^ target, words)
    return Multivector(mv.coeffs[source])


def apply_cz(mv, k, l):
    """ Z_k^l: b_l と b_k を両方含むブレードだけ符号を反転 """
    target, control = _controlled_bits(mv, k, l)
    words = np.arange(mv.size)
    both = (words & control).astype(bool) & (words & target).astype(bool)
    return Multivector(np.where(both, -mv.coeffs, mv.coeffs))


def apply_gate(gate, mv):
    gate.check(mv.dim)
    if gate.kind == GATE_X:
        return apply_x(mv, gate.target)
    if gate.kind == GATE_Z:
        return apply_z(mv, gate.target)
    if gate.kind == GATE_H:
        return apply_h(mv, gate.target)
    if gate.kind == GATE_CX:
        return apply_cx(mv, gate.target, gate.control)
    return apply_cz(mv, gate.target, gate.control)


def apply_circuit(circ, mv):
    """ 先頭のゲートから順に作用させる """
    circ.check(mv.dim)
    for gate in circ:
        mv = apply_gate(gate, mv)
    return mv


def apply_circuit_to_lattice(circ, lat, parallel=True):
    """ 全セルに同じ回路を作用させる (セルごとに独立) """
    result = lat.map(lambda mv: apply_circuit(circ, mv), parallel=parallel)
    logger.info({'action': 'apply_circuit_to_lattice', 'status': 'success',
                 'gates': len(circ), 'cells': len(lat)})
    return result


def teleport_network():
    """ H_1 H_2 Z_3^1 X_3^2 H_1 X_2^1 を作用順 (右端から) に並べたもの """
    return Circuit([
        Gate(GATE_CX, 2, 1),
        Gate(GATE_H, 1),
        Gate(GATE_CX, 3, 2),
        Gate(GATE_CZ, 3, 1),
        Gate(GATE_H, 2),
        Gate(GATE_H, 1),
    ])


def teleport_input(alpha, beta):
    """ ψ_1 Φ_23 = (alpha + beta b_1)(1 + b_2 b_3)/√2 """
    return geometric_product(single_bit(alpha, beta, bit=1, dim=3), bell_carrier())


def teleport(alpha, beta):
    """ ネットワークを通して alpha + beta b_3 を得る

    写像は線形なので alpha^2 + beta^2 = 1 は要求しない
    """
    result = apply_circuit(teleport_network(), teleport_input(alpha, beta))
    logger.debug({'action': 'teleport', 'status': 'success', 'alpha': alpha, 'beta': beta})
    return result
