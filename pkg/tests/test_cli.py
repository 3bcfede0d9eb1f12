import contextlib
import io
import json
import logging
import os
import tempfile
import xml.etree.ElementTree as ET
from unittest import TestCase

from teleport_app.cli import run, EXIT_OK, EXIT_USAGE

SAMPLE_TABLE = {
    '000': -0.07, '100': 0.32, '010': -3.08, '001': 1.06,
    '110': -0.85, '101': 0.27, '011': -0.86, '111': 4.07,
}


def run_quiet(*argv):
    """ (終了コード, 標準出力) """
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = run(['--quiet', *argv])
    return code, out.getvalue()


class CliTest(TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def write_json(self, name, obj):
        with open(self.path(name), 'w', encoding='utf-8') as f:
            json.dump(obj, f)
        return self.path(name)

    def test_teleport(self):
        code, out = run_quiet('teleport', '--alpha', '0.6', '--beta', '0.8')
        self.assertEqual(code, EXIT_OK)
        got = json.loads(out)
        self.assertAlmostEqual(got['000'], 0.6, delta=1e-12)
        self.assertAlmostEqual(got['001'], 0.8, delta=1e-12)
        for key in ('100', '010', '110', '101', '011', '111'):
            self.assertEqual(got[key], 0.0)

    def test_teleport_output_file(self):
        code, out = run_quiet('teleport', '--alpha', '1', '--beta', '0',
                              '--output', self.path('out.json'))
        self.assertEqual(code, EXIT_OK)
        with open(self.path('out.json'), encoding='utf-8') as f:
            self.assertEqual(json.load(f), json.loads(out))

    def test_color(self):
        code, out = run_quiet('color', '--x', '0')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ['nu 0.75', 'rgb #8000FF'])
        code, out = run_quiet('color', '--nu', '0')
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(float(out.split()[1]), 1.0, delta=1e-15)

    def test_color_pole(self):
        code, _ = run_quiet('color', '--nu', '0.25')
        self.assertEqual(code, EXIT_USAGE)

    def test_verify(self):
        code, out = run_quiet('verify', '--trials', '1000', '--seed', '42')
        self.assertEqual(code, EXIT_OK)
        self.assertNotIn('FAILED', out)
        self.assertTrue(out.strip())

    def test_render_empty_table(self):
        table = self.write_json('empty.json', {})
        code, _ = run_quiet('render', '--input', table, '--output', self.path('cube.svg'))
        self.assertEqual(code, EXIT_OK)
        root = ET.parse(self.path('cube.svg')).getroot()
        fills = {e.get('stroke' if e.tag.endswith('line') else 'fill')
                 for e in root if e.get('class')}
        self.assertEqual(fills, {'#8000FF'})

    def test_log_level_follows_each_run(self):
        self.addCleanup(logging.getLogger().setLevel, logging.getLogger().level)
        run_quiet('color', '--x', '0')
        self.assertEqual(logging.getLogger().level, logging.WARNING)
        with contextlib.redirect_stdout(io.StringIO()), contextlib.redirect_stderr(io.StringIO()):
            code = run(['color', '--x', '0'])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(logging.getLogger().level, logging.INFO)

    def test_render(self):
        table = self.write_json('table.json', SAMPLE_TABLE)
        code, _ = run_quiet('render', '--input', table, '--output', self.path('cube.svg'))
        self.assertEqual(code, EXIT_OK)
        root = ET.parse(self.path('cube.svg')).getroot()
        self.assertEqual(sum(1 for e in root if e.get('class')), 27)

    def test_render_with_circuit(self):
        table = self.write_json('table.json', {'000': 1.0})
        circuit = self.write_json('circ.json', [{'kind': 'X', 'target': 1}])
        code, out = run_quiet('render', '--input', table, '--circuit', circuit,
                              '--mode', 'representative', '--output', self.path('cube.svg'))
        self.assertEqual(code, EXIT_OK)
        root = ET.parse(self.path('cube.svg')).getroot()
        edge = root.find("{http://www.w3.org/2000/svg}line[@class='edge-x']")
        self.assertEqual(edge.get('stroke'), '#FF0000')

    def test_lattice_render(self):
        lattice = self.write_json('lat.json', {'0,0': SAMPLE_TABLE, '1,0': SAMPLE_TABLE})
        code, _ = run_quiet('lattice-render', '--input', lattice, '--deformation', 'sine-warp',
                            '--output', self.path('lat.svg'))
        self.assertEqual(code, EXIT_OK)
        root = ET.parse(self.path('lat.svg')).getroot()
        self.assertEqual(sum(1 for e in root if e.get('class')), 54)

    def test_bad_input(self):
        bad = self.path('bad.json')
        with open(bad, 'w', encoding='utf-8') as f:
            f.write('not json')
        code, _ = run_quiet('render', '--input', bad, '--output', self.path('x.svg'))
        self.assertEqual(code, EXIT_USAGE)
        code, _ = run_quiet('render', '--input', self.path('none.json'),
                            '--output', self.path('x.svg'))
        self.assertEqual(code, EXIT_USAGE)

    def test_usage_errors(self):
        for argv in (['fly'], ['teleport', '--alpha', '0.6'], ['color', '--x', '0', '--nu', '0'],
                     ['verify', '--trials', '0'], ['render', '--input', 'x.json']):
            code, _ = run_quiet(*argv)
            self.assertEqual(code, EXIT_USAGE, argv)
