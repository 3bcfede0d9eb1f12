""" 色相環の立体射影: 実数 x <-> 色相 ν

x(1 - sin 2πν) = cos 2πν を満たす 0 <= ν < 1 (ν = 1/4 は無限遠に対応)
(cos 2πν, sin 2πν) = (2x, x^2 - 1)/(x^2 + 1) なので ν は点 (2x, x^2 - 1) の偏角
"""
import colorsys
import math
from typing import NamedTuple

import numpy as np

POLE_NU = 0.25
POLE_TOLERANCE = 1e-12
# h(0) = Hue[3/4]
BACKGROUND_NU = 0.75


class RgbColor(NamedTuple):
    r: float
    g: float
    b: float

    def to_bytes(self):
        """ 255倍して四捨五入 (0.5は切り上げ) """
        return tuple(int(math.floor(c * 255 + 0.5)) for c in self)

    def hex(self):
        return '#{:02X}{:02X}{:02X}'.format(*self.to_bytes())


def check_nu(nu):
    if not 0.0 <= nu < 1.0:
        raise ValueError(f'hue {nu} not in range [0, 1)')
    return float(nu)


def nu_of_x(x):
    """ 実数 -> 色相. 配列を渡すと要素ごとに計算する

    |x| が大きいと 1/4 に近づく (溢れても例外は出さない)
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f'x must be finite, got {x}')
    with np.errstate(over='ignore'):
        theta = np.arctan2(arr * arr - 1.0, 2.0 * arr)
    # 角度ではなく周回数で正規化する (x = 0 で ν = 3/4 がちょうど出る)
    nu = theta / (2 * math.pi)
    nu = np.where(nu < 0.0, nu + 1.0, nu)
    # 0 のすぐ下が丸めで 1.0 になった場合は 0 に戻す
    nu = np.where(nu >= 1.0, 0.0, nu)
    if nu.ndim == 0:
        return float(nu)
    return nu


def x_of_nu(nu):
    """ 色相 -> 実数

    x = cos 2πν / (1 - sin 2πν) を u = π(ν - 1/4) で -cos u / sin u と書き直し,
    極の近くで 1 - sin の桁落ちを避ける
    """
    nu = check_nu(nu)
    if abs(nu - POLE_NU) <= POLE_TOLERANCE:
        raise ValueError(f'hue {nu} is the pole of the projection (x = infinity)')
    u = math.pi * (nu - POLE_NU)
    return -math.cos(u) / math.sin(u)


def hue_to_rgb(nu):
    """ Mathematica の Hue[ν]: 彩度1, 明度1 のHSV """
    return RgbColor(*colorsys.hsv_to_rgb(check_nu(nu), 1.0, 1.0))


def color_of_x(x):
    return hue_to_rgb(nu_of_x(x))
