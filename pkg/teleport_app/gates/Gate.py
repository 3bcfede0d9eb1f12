from dataclasses import dataclass
from typing import Optional

GATE_X = 'X'
GATE_Z = 'Z'
GATE_H = 'H'
GATE_CX = 'CX'
GATE_CZ = 'CZ'

SINGLE_KINDS = (GATE_X, GATE_Z, GATE_H)
CONTROLLED_KINDS = (GATE_CX, GATE_CZ)
KINDS = SINGLE_KINDS + CONTROLLED_KINDS


@dataclass(frozen=True)
class Gate:
    """ ゲート記述子

    kind: X, Z, H, CX, CZ のいずれか
    target: 作用するビット k (1始まり)
    control: 制御ビット l (CX, CZ のみ)
    """
    kind: str
    target: int
    control: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f'unknown gate kind {self.kind!r}, expected one of {KINDS}')
        if isinstance(self.target, bool) or not isinstance(self.target, int) or self.target < 1:
            raise ValueError(f'gate target {self.target!r} must be a bit index >= 1')
        if self.kind in CONTROLLED_KINDS:
            if isinstance(self.control, bool) or not isinstance(self.control, int) or self.control < 1:
                raise ValueError(f'{self.kind} gate needs a control bit index >= 1, got {self.control!r}')
            if self.control == self.target:
                raise ValueError(f'{self.kind} gate control equals target {self.target}')
        elif self.control is not None:
            raise ValueError(f'{self.kind} gate takes no control bit')

    def __repr__(self):
        # X_k^l 表記
        if self.control is None:
            return f'{self.kind}_{self.target}'
        return f'{self.kind}_{self.target}^{self.control}'

    @property
    def base_kind(self):
        """ 制御を外したときのゲート (CX -> X) """
        return self.kind[-1]

    def max_bit(self):
        return max(self.target, self.control or 0)

    def check(self, dim):
        if self.max_bit() > dim:
            raise ValueError(f'gate {self!r} does not fit {dim} bits')


class Circuit(object):
    """ ゲート列. 先頭から順に作用する (式の右端の演算子が先頭) """
    def __init__(self, gates=()):
        self.gates = tuple(gates)
        for gate in self.gates:
            if not isinstance(gate, Gate):
                raise TypeError(f'circuit entries must be gates, got {type(gate).__name__}')

    def __repr__(self):
        # 作用順と逆に並べると演算子積の形になる
        return 'Circuit(' + ' '.join(repr(g) for g in reversed(self.gates)) + ')'

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.gates == other.gates

    def __hash__(self):
        return hash(self.gates)

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __getitem__(self, index):
        return self.gates[index]

    def then(self, gate):
        return self.__class__(self.gates + (gate,))

    def max_bit(self):
        return max((g.max_bit() for g in self.gates), default=0)

    def check(self, dim):
        for gate in self.gates:
            gate.check(dim)
