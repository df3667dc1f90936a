"""Standalone SVG drawings of Z², the sublattice αZ[i] and its fundamental region"""
import logging
from typing import Dict, Iterable, Optional

from ..config import get_settings
from ..exceptions import OrderingError, PreconditionError
from .gaussian import GaussInt, I, norm
from .quotient_ring import build_ring
from .quotient_scheme import quotient
from .scheme import build_scheme
from .tiling import fundamental_representatives

logger = logging.getLogger(__name__)

ns_svg = 'http://www.w3.org/2000/svg'

# presentation constants
STYLE = dict(
    unit=36,
    margin=24,
    point_radius=4.5,
    sublattice_radius=9,
    stroke_width=1.5,
    font_size=10,
    ink='#222222',
    sublattice='#c0392b',
    region_fill='#e3ecf7',
    region_stroke='#3a6ea5',
    palette=('#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd',
             '#8c564b', '#e377c2', '#7f7f7f', '#bcbd22', '#17becf'),
)


def demangle(k):
    return k.replace('_', '-')


def rounder(x, prec=6):
    if type(x) is float:
        xr = round(x, ndigits=prec)
        if (xr % 1) == 0:
            return int(xr)
        return xr
    return x


def props_repr(d):
    return ' '.join([f'{demangle(k)}="{rounder(v)}"' for k, v in d.items()])


def element(tag, inner=None, **attr):
    props = props_repr(attr)
    pre = ' ' if props else ''
    if inner is None:
        return f'<{tag}{pre}{props} />'
    return f'<{tag}{pre}{props}>{inner}</{tag}>'


def _default_window(alpha: GaussInt) -> int:
    corners = [alpha, -I * alpha, alpha - I * alpha]
    return max(max(abs(c.re), abs(c.im)) for c in corners) + 1


def render_svg(alpha: GaussInt, window: Optional[int] = None, orbit_colors: bool = False,
               zero_tilde: Optional[Iterable[int]] = None, gfp_labels: bool = False,
               cap: Optional[int] = None) -> str:
    """Draw Z² in [-window, window]² with the fundamental region of αZ[i].

    Representatives are filled, other points hollow. Points are colored by
    scheme class with orbit_colors, or by quotient point class when
    zero_tilde is given.
    """
    if cap is None:
        cap = get_settings().render_norm_cap
    if norm(alpha) > cap:
        raise PreconditionError(f"norm({alpha}) = {norm(alpha)} exceeds the render cap {cap}")

    ring = build_ring(alpha)
    if gfp_labels and not ring.is_cyclic:
        raise OrderingError(f"GF labels need a cyclic quotient; Z[i]/({alpha}) has factors {ring.invariant_factors}")

    w = window if window is not None else _default_window(alpha)
    unit, margin = STYLE['unit'], STYLE['margin']
    size = 2 * w * unit + 2 * margin

    def to_px(z: GaussInt):
        return margin + (z.re + w) * unit, margin + (w - z.im) * unit

    color_of: Dict[int, str] = {}
    palette = STYLE['palette']
    if zero_tilde is not None:
        qs = quotient(build_scheme(ring), zero_tilde)
        for k, cls in enumerate(qs.point_classes):
            for x in cls:
                color_of[x] = palette[k % len(palette)]
    elif orbit_colors:
        scheme = build_scheme(ring)
        for k, orbit in enumerate(scheme.orbits):
            for x in orbit:
                color_of[x] = palette[k % len(palette)]

    parts = []
    region = [GaussInt(0), alpha, alpha - I * alpha, -I * alpha]
    parts.append(element(
        'polygon',
        points=' '.join(f'{rounder(px)},{rounder(py)}' for px, py in map(to_px, region)),
        fill=STYLE['region_fill'], stroke=STYLE['region_stroke'], stroke_width=STYLE['stroke_width']))

    reps = set(fundamental_representatives(alpha))
    for x in range(-w, w + 1):
        for y in range(-w, w + 1):
            z = GaussInt(x, y)
            px, py = to_px(z)
            idx = ring.index_of(z)
            if idx == 0:
                parts.append(element('circle', cx=px, cy=py, r=STYLE['sublattice_radius'], fill='none',
                                     stroke=STYLE['sublattice'], stroke_width=STYLE['stroke_width']))
            color = color_of.get(idx, STYLE['ink'])
            filled = z in reps
            parts.append(element('circle', cx=px, cy=py, r=STYLE['point_radius'],
                                 fill=color if filled else 'white', stroke=color,
                                 stroke_width=STYLE['stroke_width']))
            if gfp_labels and filled:
                parts.append(element('text', str(idx), x=px + STYLE['point_radius'] + 1,
                                     y=py - STYLE['point_radius'] - 1, font_size=STYLE['font_size'],
                                     fill=STYLE['ink']))

    logger.info(f"Rendered ({alpha})Z[i] in window {w}: {len(parts)} elements")
    inner = '\n' + '\n'.join(parts) + '\n'
    return element('svg', inner, width=size, height=size, viewBox=f'0 0 {size} {size}',
                   xmlns=ns_svg, version='1.1') + '\n'
