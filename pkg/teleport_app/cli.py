""" コマンドライン

    python -m teleport_app teleport --alpha 0.6 --beta 0.8
    python -m teleport_app render --input table.json --output cube.svg
    python -m teleport_app lattice-render --input lattice.json --deformation sine-warp --output lattice.svg
    python -m teleport_app verify --trials 1000 --seed 42
    python -m teleport_app color --x 0
"""
import logging
import sys
from argparse import ArgumentParser

from .gates import teleport, apply_circuit, apply_circuit_to_lattice
from .formats import (
    build_table, table_of, read_table, read_lattice, read_circuit, write_text,
)
from .render import (
    CubeStyle, MODES, BACKGROUND_NU, DEFAULT_ANGLE, DEFAULT_DEPTH, GRID_SPACING,
    cube_scene, lattice_scene, grid_placement, sine_warp, emit_svg,
    nu_of_x, x_of_nu, hue_to_rgb,
)
from .utils import format_real, pprint_table
from .verify import run_checks

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

PLACEMENTS = ('grid',)
DEFORMATIONS = ('none', 'sine-warp')


def _add_style_flags(parser):
    parser.add_argument('--mode', choices=MODES, default=MODES[0])
    parser.add_argument('--background', type=float, default=BACKGROUND_NU,
                        help='background hue nu')
    parser.add_argument('--angle', type=float, default=DEFAULT_ANGLE,
                        help='receding axis angle in degrees')
    parser.add_argument('--depth', type=float, default=DEFAULT_DEPTH,
                        help='depth foreshortening in [0, 1]')
    parser.add_argument('--width', type=int, default=600)
    parser.add_argument('--height', type=int, default=600)
    parser.add_argument('--circuit', default=None,
                        help='circuit JSON applied before drawing')
    parser.add_argument('--output', required=True, help='SVG file to write')


def build_parser():
    parser = ArgumentParser(prog='teleport_app',
                            description='geometric teleportation with Cl(3) multivectors')
    parser.add_argument('--quiet', action='store_true', help='log warnings only')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('teleport', help='run the six-gate network on alpha + beta b1')
    p.add_argument('--alpha', type=float, required=True)
    p.add_argument('--beta', type=float, required=True)
    p.add_argument('--output', default=None, help='write the coefficient table as JSON')

    p = sub.add_parser('render', help='draw one Cl(3) multivector as a colored cube')
    p.add_argument('--input', required=True, help='coefficient table JSON')
    _add_style_flags(p)

    p = sub.add_parser('lattice-render', help='draw a lattice of colored cubes')
    p.add_argument('--input', required=True, help='lattice JSON')
    p.add_argument('--placement', choices=PLACEMENTS, default='grid')
    p.add_argument('--spacing', type=float, default=GRID_SPACING)
    p.add_argument('--deformation', choices=DEFORMATIONS, default='none')
    _add_style_flags(p)

    p = sub.add_parser('verify', help='check the geometric gates against the state-vector oracle')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--trials', type=int, default=1000)

    p = sub.add_parser('color', help='color wheel map between x and hue nu')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--x', type=float)
    group.add_argument('--nu', type=float)
    return parser


def _style(args):
    return CubeStyle(mode=args.mode, background=args.background,
                     angle=args.angle, depth=args.depth)


def cmd_teleport(args):
    mv = teleport(args.alpha, args.beta)
    text = build_table(mv)
    if args.output:
        write_text(args.output, text + '\n')
    print(text)
    return EXIT_OK


def cmd_render(args):
    # 立方体は Cl(3) だけなので空の表 {} も読めるよう次元を与える
    mv = read_table(args.input, dim=3)
    if args.circuit:
        mv = apply_circuit(read_circuit(args.circuit), mv)
    pprint_table(table_of(mv))
    scene = cube_scene(mv, _style(args))
    write_text(args.output, emit_svg(scene, args.width, args.height))
    return EXIT_OK


def cmd_lattice_render(args):
    lat = read_lattice(args.input)
    if args.circuit:
        lat = apply_circuit_to_lattice(read_circuit(args.circuit), lat)
    placement = grid_placement(lat.cells(), args.spacing)
    deformation = sine_warp() if args.deformation == 'sine-warp' else None
    scene = lattice_scene(lat, _style(args), placement, deformation)
    write_text(args.output, emit_svg(scene, args.width, args.height))
    return EXIT_OK


def cmd_verify(args):
    if args.trials < 1:
        raise ValueError(f'trials must be positive, got {args.trials}')
    results = run_checks(args.seed, args.trials)
    for result in results:
        status = 'ok' if result.passed else 'FAILED'
        print(f'{result.name:30}{format_real(result.max_deviation):>26}  {status}')
    if all(result.passed for result in results):
        return EXIT_OK
    logger.error({'action': 'verify', 'status': 'failed',
                  'checks': [r.name for r in results if not r.passed]})
    return EXIT_VERIFY_FAILED


def cmd_color(args):
    if args.x is not None:
        nu = nu_of_x(args.x)
        print(f'nu {format_real(nu)}')
        print(f'rgb {hue_to_rgb(nu).hex()}')
    else:
        print(f'x {format_real(x_of_nu(args.nu))}')
    return EXIT_OK


COMMANDS = {
    'teleport': cmd_teleport,
    'render': cmd_render,
    'lattice-render': cmd_lattice_render,
    'verify': cmd_verify,
    'color': cmd_color,
}


def run(argv=None):
    """ サブコマンドを1つ実行して終了コードを返す """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_USAGE
    # 同じプロセスで何度呼ばれても --quiet の指定に従う
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        stream=sys.stderr, force=True)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, TypeError, OSError) as ex:
        # json.JSONDecodeError は ValueError の一種
        logger.error({'action': args.command, 'error': str(ex)})
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
