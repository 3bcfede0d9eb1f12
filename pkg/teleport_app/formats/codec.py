""" 係数表, 格子, 回路のJSON形式

係数表:  {"000": 0.6, "001": 0.8}            キーは 'A1A2...An', 無いキーは0
格子:    {"0,0,0": {係数表}, "1,0,0": {...}}  キーはセル番号 'i,j,k' (1〜3個)
回路:    [{"kind": "CX", "target": 2, "control": 1}, ...]  リストの順に作用
数値は17桁で書き出す
"""
import json
import logging
import numbers

from ..algebra import LatticeMultivector, encode, decode, key_of, normalize_cell
from ..gates import Gate, Circuit
from ..utils import sorted_dict_by_key, format_real

logger = logging.getLogger(__name__)


def _check_real(key, value):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ValueError(f'value for {key!r} must be a number, got {value!r}')
    return float(value)


def table_of(mv):
    """ 多重ベクトル -> {'ABC': 値} """
    return {key_of(bits): value for bits, value in decode(mv).items()}


def build_table(mv):
    table = sorted_dict_by_key(table_of(mv))
    body = ', '.join(f'{json.dumps(k)}: {format_real(v)}' for k, v in table.items())
    return '{' + body + '}'


def parse_table(obj, dim=None):
    """ JSON から読んだ dict -> 多重ベクトル. dim を省くとキーの長さから決める """
    if not isinstance(obj, dict):
        raise ValueError(f'coefficient table must be a JSON object, got {type(obj).__name__}')
    lengths = {len(k) for k in obj}
    if dim is None:
        if len(lengths) != 1:
            raise ValueError(f'cannot infer dimension from keys {sorted(obj)}')
        dim = lengths.pop()
    table = {k: _check_real(k, v) for k, v in obj.items()}
    return encode(table, dim)


def format_cell(cell):
    return ','.join(str(n) for n in cell)


def parse_cell(text):
    try:
        return normalize_cell(tuple(int(part) for part in text.split(',')))
    except ValueError as ex:
        raise ValueError(f'bad cell index {text!r}: {ex}')


def build_lattice(lat):
    body = ', '.join(f'{json.dumps(format_cell(cell))}: {build_table(mv)}'
                     for cell, mv in lat.items())
    return '{' + body + '}'


def parse_lattice(obj):
    if not isinstance(obj, dict):
        raise ValueError(f'lattice must be a JSON object, got {type(obj).__name__}')
    cells = {parse_cell(text): parse_table(table, dim=3) for text, table in obj.items()}
    return LatticeMultivector(cells)


def build_circuit(circ):
    gates = []
    for gate in circ:
        entry = {'kind': gate.kind, 'target': gate.target}
        if gate.control is not None:
            entry['control'] = gate.control
        gates.append(entry)
    return json.dumps(gates)


def parse_circuit(obj):
    if not isinstance(obj, list):
        raise ValueError(f'circuit must be a JSON list, got {type(obj).__name__}')
    gates = []
    for entry in obj:
        if not isinstance(entry, dict) or set(entry) - {'kind', 'target', 'control'}:
            raise ValueError(f'bad gate entry {entry!r}')
        gates.append(Gate(entry.get('kind'), entry.get('target'), entry.get('control')))
    return Circuit(gates)


def load_json(path):
    with open(path, encoding='utf-8') as f:
        return json.load(f)


def write_text(path, text):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info({'action': 'write_text', 'status': 'success', 'path': path})


def read_table(path, dim=None):
    return parse_table(load_json(path), dim)


def read_lattice(path):
    return parse_lattice(load_json(path))


def read_circuit(path):
    return parse_circuit(load_json(path))
