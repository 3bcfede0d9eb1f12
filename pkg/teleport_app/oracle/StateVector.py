import numpy as np

MAX_QUBITS = 16


class StateVector(object):
    """ n量子ビットの実振幅

    amps[i] は |A_1 ... A_n> の振幅. i のビット k-1 が A_k (ブレード番号と同じ規約)
    """
    def __init__(self, amps):
        amps = np.array(amps, dtype=float)
        if amps.ndim != 1:
            raise ValueError(f'amplitudes must be a flat sequence, got shape {amps.shape}')
        size = amps.shape[0]
        dim = size.bit_length() - 1
        if size < 2 or size != 1 << dim or dim > MAX_QUBITS:
            raise ValueError(f'{size} amplitudes is not 2^n for 1 <= n <= {MAX_QUBITS}')
        if not np.all(np.isfinite(amps)):
            raise ValueError('amplitudes must be finite')
        amps.flags.writeable = False
        self._amps = amps
        self.dim = dim

    @classmethod
    def basis(cls, index, dim):
        if not 1 <= dim <= MAX_QUBITS:
            raise ValueError(f'{dim} qubits not in range 1 to {MAX_QUBITS}')
        if index < 0 or index >= 1 << dim:
            raise ValueError(f'basis index {index} not in range to {(1 << dim) - 1}')
        amps = np.zeros(1 << dim)
        amps[index] = 1.0
        return cls(amps)

    @property
    def amps(self):
        return self._amps

    def __repr__(self):
        kets = []
        for i, a in enumerate(self._amps.tolist()):
            if a != 0.0:
                bits = ''.join(str((i >> k) & 1) for k in range(self.dim))
                kets.append(f'{a!r}|{bits}>')
        return 'StateVector(' + (' + '.join(kets) or '0') + ')'

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self._amps, other._amps)

    __hash__ = None

    def as_tensor(self):
        """ 形 (2, ..., 2) の配列. 軸 n-k が量子ビット k """
        return self._amps.reshape([2] * self.dim)
