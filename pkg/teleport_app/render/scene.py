""" Cl(3) の多重ベクトルを色付き立方体として描く

角 <- ψ000, x/y/z 方向の辺 <- ψ100/ψ010/ψ001,
x-y/x-z/y-z 面 <- ψ110/ψ101/ψ011, 内部 <- ψ111
"""
import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Tuple

from .colorwheel import RgbColor, BACKGROUND_NU, check_nu, color_of_x, hue_to_rgb

logger = logging.getLogger(__name__)

MODE_REDUNDANT = 'redundant'
MODE_REPRESENTATIVE = 'representative'
MODES = (MODE_REDUNDANT, MODE_REPRESENTATIVE)

DEFAULT_ANGLE = 30.0
DEFAULT_DEPTH = 0.5
INTERIOR_OPACITY = 0.35
WALL_OPACITY = 0.5
GRID_SPACING = 1.5
SINE_WARP_AMPLITUDE = 0.15
SINE_WARP_FREQUENCY = 0.8
MAX_WORKERS = 10

# 要素の種類 -> ブレード番号
CORNER = 'corner'
EDGE_X = 'edge-x'
EDGE_Y = 'edge-y'
EDGE_Z = 'edge-z'
WALL_XY = 'wall-xy'
WALL_XZ = 'wall-xz'
WALL_YZ = 'wall-yz'
INTERIOR = 'interior'
ELEMENT_CLASSES = {
    CORNER: 0b000,
    EDGE_X: 0b001,
    EDGE_Y: 0b010,
    EDGE_Z: 0b100,
    WALL_XY: 0b011,
    WALL_XZ: 0b101,
    WALL_YZ: 0b110,
    INTERIOR: 0b111,
}
_EDGE_TAGS = (EDGE_X, EDGE_Y, EDGE_Z)
# 面の法線方向の軸
_WALL_AXES = {WALL_XY: 2, WALL_XZ: 1, WALL_YZ: 0}


@dataclass(frozen=True)
class CubeStyle:
    """ 描画設定. projection は斜投影 (奥行き軸の角度[deg] と縮率) """
    mode: str = MODE_REDUNDANT
    background: float = BACKGROUND_NU
    angle: float = DEFAULT_ANGLE
    depth: float = DEFAULT_DEPTH
    scale: float = 100.0
    edge_width: float = 4.0
    corner_radius: float = 6.0
    wall_opacity: float = WALL_OPACITY
    interior_opacity: float = INTERIOR_OPACITY

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f'unknown mode {self.mode!r}, expected one of {MODES}')
        check_nu(self.background)
        if not 0.0 <= self.depth <= 1.0:
            raise ValueError(f'depth foreshortening {self.depth} not in [0, 1]')
        for name in ('scale', 'edge_width', 'corner_radius'):
            if getattr(self, name) <= 0:
                raise ValueError(f'{name} must be positive, got {getattr(self, name)}')
        for name in ('wall_opacity', 'interior_opacity'):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f'{name} {getattr(self, name)} not in [0, 1]')

    def project(self, point):
        """ 3D -> 2D. SVGに合わせて y は下向き """
        x, y, z = point
        a = math.radians(self.angle)
        return (self.scale * (x + self.depth * z * math.cos(a)),
                -self.scale * (y + self.depth * z * math.sin(a)))


class Polygon(NamedTuple):
    points: Tuple[Tuple[float, float], ...]
    color: RgbColor
    tag: str
    opacity: float = 1.0


class Segment(NamedTuple):
    start: Tuple[float, float]
    end: Tuple[float, float]
    color: RgbColor
    tag: str
    width: float = 1.0
    opacity: float = 1.0


class Disc(NamedTuple):
    center: Tuple[float, float]
    radius: float
    color: RgbColor
    tag: str
    opacity: float = 1.0


@dataclass(frozen=True)
class Scene:
    """ 奥から手前の順に並んだ描画要素 """
    elements: tuple = ()
    background: RgbColor = hue_to_rgb(BACKGROUND_NU)

    def __len__(self):
        return len(self.elements)

    def tags(self):
        return [e.tag for e in self.elements]

    def colors(self):
        return [e.color for e in self.elements]


def _convex_hull(points):
    """ Andrew の単調連鎖法 """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _wall(tag, level):
    axis = _WALL_AXES[tag]
    u, v = [a for a in range(3) if a != axis]
    corners = []
    for du, dv in ((0, 0), (1, 0), (1, 1), (0, 1)):
        p = [0, 0, 0]
        p[axis], p[u], p[v] = level, du, dv
        corners.append(tuple(p))
    return corners


def _edge(axis, fixed):
    a = [0, 0, 0]
    b = [0, 0, 0]
    others = [i for i in range(3) if i != axis]
    for i, value in zip(others, fixed):
        a[i] = b[i] = value
    b[axis] = 1
    return tuple(a), tuple(b)


def _layout(mode):
    """ (奥の面, 辺, 手前の面, 角) を描く順に返す. 奥行き軸は z, 見えるのは z=0, x=1, y=1 の面 """
    if mode == MODE_REPRESENTATIVE:
        back = [(WALL_XZ, 0), (WALL_YZ, 0)]
        edges = [(axis, (0, 0)) for axis in range(3)]
        front = [(WALL_XY, 0)]
        corners = [(0, 0, 0)]
    else:
        back = [(WALL_XY, 1), (WALL_XZ, 0), (WALL_YZ, 0)]
        edges = [(axis, fixed) for axis in range(3)
                 for fixed in itertools.product((0, 1), repeat=2)]
        front = [(WALL_XY, 0), (WALL_XZ, 1), (WALL_YZ, 1)]
        corners = list(itertools.product((0, 1), repeat=3))
    return back, edges, front, corners


def cube_scene(mv, style=CubeStyle(), offset=(0.0, 0.0, 0.0), deformation=None):
    """ 多重ベクトル1個を立方体として描く

    offset はセルの位置 (2成分なら z = 0), deformation は頂点の変位 (色は変えない)
    """
    if mv.dim != 3:
        raise TypeError(f'cube rendering needs a Cl(3) multivector, got Cl({mv.dim})')
    offset = pad_offset(offset)

    def place(vertex):
        p = tuple(o + v for o, v in zip(offset, vertex))
        if deformation is not None:
            p = tuple(deformation(p))
        return style.project(p)

    colors = {tag: color_of_x(mv[word]) for tag, word in ELEMENT_CLASSES.items()}
    back, edges, front, corners = _layout(style.mode)

    def wall(tag, level):
        return Polygon(tuple(place(v) for v in _wall(tag, level)), colors[tag], tag,
                       style.wall_opacity)

    elements = [wall(tag, level) for tag, level in back]
    hull = _convex_hull([place(v) for v in itertools.product((0, 1), repeat=3)])
    elements.append(Polygon(tuple(hull), colors[INTERIOR], INTERIOR, style.interior_opacity))
    for axis, fixed in edges:
        start, end = _edge(axis, fixed)
        tag = _EDGE_TAGS[axis]
        elements.append(Segment(place(start), place(end), colors[tag], tag, style.edge_width))
    elements.extend(wall(tag, level) for tag, level in front)
    elements.extend(Disc(place(v), style.corner_radius, colors[CORNER], CORNER)
                    for v in corners)
    return Scene(tuple(elements), hue_to_rgb(style.background))


def pad_offset(offset):
    """ 1〜3成分のオフセットを0で埋めて3成分にする """
    offset = tuple(float(o) for o in offset)
    if not 1 <= len(offset) <= 3:
        raise ValueError(f'offset {offset} must have 1 to 3 components')
    return offset + (0.0,) * (3 - len(offset))


def grid_placement(cells, spacing=GRID_SPACING):
    """ セル番号を3成分まで0で埋めて間隔 spacing で並べる """
    placement = {}
    for cell in cells:
        padded = tuple(cell) + (0,) * (3 - len(cell))
        placement[tuple(cell)] = tuple(spacing * n for n in padded)
    return placement


def sine_warp(amplitude=SINE_WARP_AMPLITUDE, frequency=SINE_WARP_FREQUENCY):
    """ 頂点の位置だけで決まる変形なので隣のセルと頂点が食い違わない """
    def deform(point):
        x, y, z = point
        return (x + amplitude * math.sin(frequency * y),
                y + amplitude * math.sin(frequency * z),
                z + amplitude * math.sin(frequency * x))
    return deform


def lattice_scene(lat, style=CubeStyle(), placement=None, deformation=None, parallel=True):
    """ 格子の各セルを立方体として描き, 奥のセルから順に重ねる """
    cells = lat.cells()
    if placement is None:
        placement = grid_placement(cells)
    missing = [cell for cell in cells if cell not in placement]
    if missing:
        raise ValueError(f'no placement for occupied cells {missing}')
    placement = {cell: pad_offset(placement[cell]) for cell in cells}

    def center(cell):
        p = tuple(o + 0.5 for o in placement[cell])
        if deformation is not None:
            p = tuple(deformation(p))
        return p

    # 画家のアルゴリズム: z が大きい (奥の) セルから
    order = sorted(cells, key=lambda c: (-center(c)[2], center(c)[0], center(c)[1], c))

    def render(cell):
        return cube_scene(lat.get(cell), style, placement[cell], deformation)

    if parallel and len(order) > 1:
        with ThreadPoolExecutor(max_workers=MAX_WORKERS) as executor:
            scenes = list(executor.map(render, order))
    else:
        scenes = [render(cell) for cell in order]
    elements = tuple(e for scene in scenes for e in scene.elements)
    logger.info({'action': 'lattice_scene', 'status': 'success',
                 'cells': len(cells), 'elements': len(elements)})
    return Scene(elements, hue_to_rgb(style.background))
