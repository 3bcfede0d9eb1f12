""" 検証スイート (CLI の verify)

乱数は numpy.random.default_rng (PCG64) に seed を与えて作る. 同じ seed なら同じ結果
"""
import logging
import math
from typing import NamedTuple

import numpy as np

from .algebra import (
    Multivector, blade_product, grade_of, geometric_product, inner_product, outer_product,
)
from .gates import (
    Gate, Circuit, GATE_X, GATE_Z, GATE_H, GATE_CX, GATE_CZ,
    apply_gate, apply_circuit, teleport,
)
from .oracle import StateVector, sv_apply_gate, sv_apply_circuit, sv_teleport, equivalence_check
from .render.colorwheel import nu_of_x, x_of_nu

logger = logging.getLogger(__name__)

TOLERANCE = 1e-12
ASSOCIATIVITY_TOLERANCE = 1e-10
ROUNDTRIP_TOLERANCE = 1e-9
CIRCUIT_LENGTH = 20
DIM = 3
COLOR_GRID_SIZE = 10 ** 5
COLOR_GRID_RANGE = 50.0


class CheckResult(NamedTuple):
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self):
        return self.max_deviation <= self.tolerance


def all_gates(dim=DIM):
    """ dim ビットに収まる全てのゲート記述子 """
    gates = [Gate(kind, k) for kind in (GATE_X, GATE_Z, GATE_H) for k in range(1, dim + 1)]
    gates += [Gate(kind, k, l) for kind in (GATE_CX, GATE_CZ)
              for k in range(1, dim + 1) for l in range(1, dim + 1) if k != l]
    return gates


def random_unit_pair(rng):
    phi = rng.uniform(0.0, 2 * math.pi)
    return math.cos(phi), math.sin(phi)


def random_multivector(rng, dim=DIM, low=-10.0, high=10.0):
    return Multivector(rng.uniform(low, high, 1 << dim))


def random_circuit(rng, dim=DIM, length=CIRCUIT_LENGTH):
    gates = all_gates(dim)
    return Circuit([gates[i] for i in rng.integers(0, len(gates), length)])


def check_teleport(rng, trials):
    worst = 0.0
    for _ in range(trials):
        alpha, beta = random_unit_pair(rng)
        expected = Multivector([alpha, 0, 0, 0, beta, 0, 0, 0])
        result = teleport(alpha, beta)
        worst = max(worst, result.max_deviation(expected))
        _, deviation = equivalence_check(result, sv_teleport(alpha, beta))
        worst = max(worst, deviation)
    return CheckResult('teleport identity', worst, TOLERANCE)


def check_basis_gates(dim=DIM):
    """ 基底ブレードに1ゲート. 成分は 0, ±1, ±1/√2 なので完全一致を要求 """
    worst = 0.0
    for gate in all_gates(dim):
        for m in range(1 << dim):
            mv = apply_gate(gate, Multivector.blade(m, dim))
            sv = sv_apply_gate(StateVector.basis(m, dim), gate)
            worst = max(worst, equivalence_check(mv, sv, atol=0.0)[1])
    return CheckResult('basis gate equivalence', worst, 0.0)


def check_random_circuits(rng, trials):
    worst = 0.0
    for _ in range(trials):
        circ = random_circuit(rng)
        state = rng.uniform(-1.0, 1.0, 1 << DIM)
        state /= np.linalg.norm(state)
        mv = apply_circuit(circ, Multivector(state))
        sv = sv_apply_circuit(circ, StateVector(state))
        worst = max(worst, equivalence_check(mv, sv)[1])
    return CheckResult('random circuit equivalence', worst, TOLERANCE)


def check_generators(dim=DIM):
    """ b_k b_l = -b_l b_k, b_k^2 = 1 (完全一致) """
    worst = 0.0
    one = Multivector.scalar(1.0, dim)
    for k in range(1, dim + 1):
        bk = Multivector.basis_vector(k, dim)
        worst = max(worst, geometric_product(bk, bk).max_deviation(one))
        for l in range(1, dim + 1):
            if l == k:
                continue
            bl = Multivector.basis_vector(l, dim)
            worst = max(worst, geometric_product(bk, bl).max_deviation(-geometric_product(bl, bk)))
    # 次数gのブレードの2乗は (-1)^{g(g-1)/2}, 生成元はちょうど +1
    for m in range(1 << dim):
        word, sign = blade_product(m, m, dim)
        g = grade_of(m)
        worst = max(worst, float(word != 0), float(sign != (-1) ** (g * (g - 1) // 2)))
    return CheckResult('generator laws', worst, 0.0)


def check_associativity(rng, trials):
    worst = 0.0
    for _ in range(trials):
        a, b, c = (random_multivector(rng) for _ in range(3))
        left = geometric_product(geometric_product(a, b), c)
        right = geometric_product(a, geometric_product(b, c))
        worst = max(worst, left.max_deviation(right))
    return CheckResult('associativity', worst, ASSOCIATIVITY_TOLERANCE)


def check_vector_split(rng, trials):
    """ ベクトル同士では ab = a·b + a∧b """
    worst = 0.0
    for _ in range(trials):
        a = random_multivector(rng).grade(1)
        b = random_multivector(rng).grade(1)
        split = inner_product(a, b) + outer_product(a, b)
        worst = max(worst, geometric_product(a, b).max_deviation(split))
    return CheckResult('vector product split', worst, TOLERANCE)


def check_gate_laws(rng, trials):
    """ 各ゲートの2乗が恒等写像, ノルムを保つ """
    worst = 0.0
    for _ in range(trials):
        mv = random_multivector(rng, low=-1.0, high=1.0)
        for gate in all_gates():
            once = apply_gate(gate, mv)
            worst = max(worst, apply_gate(gate, once).max_deviation(mv),
                        abs(once.norm() - mv.norm()))
    return CheckResult('gate involution and norm', worst, TOLERANCE)


def check_colorwheel():
    xs = np.linspace(-COLOR_GRID_RANGE, COLOR_GRID_RANGE, COLOR_GRID_SIZE)
    theta = 2 * math.pi * nu_of_x(xs)
    residual = float(np.max(np.abs(xs * (1 - np.sin(theta)) - np.cos(theta))))
    roundtrip = 0.0
    for k in range(-6, 7):
        for x in (10.0 ** k, -10.0 ** k):
            roundtrip = max(roundtrip, abs(x_of_nu(nu_of_x(x)) - x) / abs(x))
    return [CheckResult('color wheel residual', residual, TOLERANCE),
            CheckResult('color wheel roundtrip', roundtrip, ROUNDTRIP_TOLERANCE)]


def run_checks(seed=0, trials=1000):
    """ 全検査を実行. trials は乱数検査の回数 (回路, 結合則などは trials/10) """
    rng = np.random.default_rng(seed)
    small = max(1, trials // 10)
    results = [
        check_teleport(rng, trials),
        check_basis_gates(),
        check_random_circuits(rng, small),
        check_generators(),
        check_associativity(rng, small),
        check_vector_split(rng, small),
        check_gate_laws(rng, small),
    ]
    results.extend(check_colorwheel())
    for result in results:
        logger.info({'action': 'verify', 'check': result.name,
                     'status': 'passed' if result.passed else 'failed',
                     'max_deviation': result.max_deviation})
    return results
