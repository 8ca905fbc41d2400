import pytest

from hat.seidel import common


def test_default_conf():
    conf = common.get_conf()
    assert conf == common.default_conf

    conf['census']['max_n'] = 3
    assert common.default_conf['census']['max_n'] == 7


def test_conf_file(tmp_path):
    path = tmp_path / 'conf.toml'
    path.write_text('seed = 5\n'
                    'unknown = "ignored"\n'
                    '[census]\n'
                    'batch_size = 128\n'
                    '[realize]\n'
                    'n_max = 6\n'
                    '[log]\n'
                    'version = 1\n')

    conf = common.get_conf(path)
    assert conf['seed'] == 5
    assert conf['census'] == {'max_n': 7, 'large_max_n': 8, 'batch_size': 128}
    assert conf['realize'] == {'n_max': 6}
    assert conf['verify'] == common.default_conf['verify']
    assert conf['log'] == {'version': 1}
    assert 'unknown' not in conf


@pytest.mark.parametrize('text', [
    'seed = -1',
    'seed = "0"',
    'seed = true',
    'census = 3',
    '[verify]\nrandom = 1.5',
    '[census]\nbatch_size = 0',
    'log = 1',
    'seed = ',
])
def test_conf_invalid(tmp_path, text):
    path = tmp_path / 'conf.toml'
    path.write_text(text + '\n')

    with pytest.raises(common.ConfError):
        common.get_conf(path)


def test_conf_missing(tmp_path):
    with pytest.raises(OSError):
        common.get_conf(tmp_path / 'missing.toml')


def test_parse_error():
    e = common.ParseError('expecting graph', 3)
    assert isinstance(e, ValueError)
    assert e.message == 'expecting graph'
    assert e.position == 3
    assert str(e) == 'expecting graph at position 3'
