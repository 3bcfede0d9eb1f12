from .scene import Polygon, Segment, Disc

MARGIN_RATIO = 0.05


def _num(value):
    text = f'{value:.3f}'
    # -0.000 と 0.000 を区別しない
    return '0.000' if text == '-0.000' else text


class SvgDocument:
    """ SVG 1.1 の文字列を組み立てる """
    def __init__(self):
        self.svg = ''

    def header(self, width, height, view_box):
        self.svg += (
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
            '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
            '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="{" ".join(_num(v) for v in view_box)}" '
            'xmlns="http://www.w3.org/2000/svg">\n'
        )

    def filled_rectangle(self, x, y, width, height, fill):
        self.svg += (f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(width)}" '
                     f'height="{_num(height)}" fill="{fill}"/>\n')

    def polygon(self, points, fill, opacity, cls):
        pts = ' '.join(f'{_num(x)},{_num(y)}' for x, y in points)
        self.svg += (f'<polygon class="{cls}" points="{pts}" fill="{fill}" '
                     f'fill-opacity="{opacity:g}" stroke="none"/>\n')

    def line(self, start, end, stroke, width, opacity, cls):
        self.svg += (f'<line class="{cls}" x1="{_num(start[0])}" y1="{_num(start[1])}" '
                     f'x2="{_num(end[0])}" y2="{_num(end[1])}" stroke="{stroke}" '
                     f'stroke-width="{width:g}" stroke-opacity="{opacity:g}" '
                     'stroke-linecap="round"/>\n')

    def circle(self, center, radius, fill, opacity, cls):
        self.svg += (f'<circle class="{cls}" cx="{_num(center[0])}" cy="{_num(center[1])}" '
                     f'r="{radius:g}" fill="{fill}" fill-opacity="{opacity:g}"/>\n')

    def get_svg(self):
        return f'{self.svg}</svg>\n'


def _bounds(scene):
    xs, ys = [], []
    for e in scene.elements:
        if isinstance(e, Polygon):
            xs.extend(p[0] for p in e.points)
            ys.extend(p[1] for p in e.points)
        elif isinstance(e, Segment):
            pad = e.width / 2
            for x, y in (e.start, e.end):
                xs.extend((x - pad, x + pad))
                ys.extend((y - pad, y + pad))
        else:
            xs.extend((e.center[0] - e.radius, e.center[0] + e.radius))
            ys.extend((e.center[1] - e.radius, e.center[1] + e.radius))
    return min(xs), min(ys), max(xs), max(ys)


def emit_svg(scene, width, height):
    """ シーンをSVG文字列にする. 要素はシーンの順 (奥から手前) に出力

    同じ入力に対して常に同じ文字列を返す
    """
    if isinstance(width, bool) or isinstance(height, bool) \
            or not isinstance(width, int) or not isinstance(height, int) \
            or width <= 0 or height <= 0:
        raise ValueError(f'SVG size must be positive integers, got {width}x{height}')
    if scene.elements:
        x0, y0, x1, y1 = _bounds(scene)
        margin = MARGIN_RATIO * max(x1 - x0, y1 - y0, 1.0)
        view_box = (x0 - margin, y0 - margin, x1 - x0 + 2 * margin, y1 - y0 + 2 * margin)
    else:
        view_box = (0.0, 0.0, float(width), float(height))

    doc = SvgDocument()
    doc.header(width, height, view_box)
    doc.filled_rectangle(*view_box, scene.background.hex())
    for e in scene.elements:
        if isinstance(e, Polygon):
            doc.polygon(e.points, e.color.hex(), e.opacity, e.tag)
        elif isinstance(e, Segment):
            doc.line(e.start, e.end, e.color.hex(), e.width, e.opacity, e.tag)
        elif isinstance(e, Disc):
            doc.circle(e.center, e.radius, e.color.hex(), e.opacity, e.tag)
        else:
            raise TypeError(f'cannot draw {type(e).__name__}')
    return doc.get_svg()
