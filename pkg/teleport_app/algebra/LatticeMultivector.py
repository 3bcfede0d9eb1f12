import itertools
import logging
import types
from concurrent.futures import ThreadPoolExecutor

from .Multivector import Multivector

logger = logging.getLogger(__name__)

CELL_DIM = 3
MAX_WORKERS = 10


def normalize_cell(cell):
    """ セル番号を1〜3個の整数のタプルにそろえる (N または (N_1, ..., N_m)) """
    if isinstance(cell, int):
        cell = (cell,)
    cell = tuple(cell)
    if not 1 <= len(cell) <= 3:
        raise ValueError(f'cell index {cell} must have 1 to 3 integers')
    if any(isinstance(n, bool) or not isinstance(n, int) for n in cell):
        raise ValueError(f'cell index {cell} must be made of integers')
    return cell


class LatticeMultivector(object):
    """ 格子上の多重ベクトル ψ = Σ_N Σ_{ABC} ψ_{ABC,N} c_{ABC,N}

    セルNごとに Cl(3) の多重ベクトルを持つ. 無いセルは0として読む
    更新は新しいスナップショットを返す
    """
    def __init__(self, cells=None):
        store = {}
        for cell, mv in (cells or {}).items():
            _check_cell_mv(mv)
            store[normalize_cell(cell)] = mv
        self._cells = types.MappingProxyType(store)

    @classmethod
    def uniform(cls, shape, mv):
        """ shape (例えば (4, 4)) の直方体ブロックを同じ多重ベクトルで埋める """
        _check_cell_mv(mv)
        cells = {cell: mv for cell in itertools.product(*(range(n) for n in shape))}
        return cls(cells)

    def __repr__(self):
        return f'LatticeMultivector({len(self._cells)} cells)'

    def __eq__(self, other):
        if not isinstance(other, LatticeMultivector):
            return NotImplemented
        return dict(self._cells) == dict(other._cells)

    __hash__ = None

    def __len__(self):
        return len(self._cells)

    def __contains__(self, cell):
        return normalize_cell(cell) in self._cells

    def cells(self):
        """ 格納済みのセル番号 (ソート済み) """
        return sorted(self._cells)

    def items(self):
        return [(cell, self._cells[cell]) for cell in self.cells()]

    def get(self, cell):
        return self._cells.get(normalize_cell(cell), Multivector.zero(CELL_DIM))

    def set(self, cell, mv):
        _check_cell_mv(mv)
        store = dict(self._cells)
        store[normalize_cell(cell)] = mv
        return self.__class__(store)

    def map(self, fn, parallel=True, max_workers=MAX_WORKERS):
        """ 全セルに fn を適用. セル同士は独立なのでスレッドで並列に回してよい

        結果の並びはセル順で固定, 逐次実行と同じになる
        """
        cells = self.cells()
        mvs = [self._cells[cell] for cell in cells]
        if parallel and len(cells) > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as executor:
                results = list(executor.map(fn, mvs))
        else:
            results = [fn(mv) for mv in mvs]
        logger.debug({'action': 'lattice_map', 'status': 'success', 'cells': len(cells)})
        return self.__class__(dict(zip(cells, results)))


def _check_cell_mv(mv):
    if not isinstance(mv, Multivector):
        raise TypeError(f'lattice cells hold multivectors, got {type(mv).__name__}')
    if mv.dim != CELL_DIM:
        raise TypeError(f'lattice cells hold Cl({CELL_DIM}) multivectors, got Cl({mv.dim})')


def lattice_set(lat, cell, mv):
    return lat.set(cell, mv)


def lattice_get(lat, cell):
    return lat.get(cell)
