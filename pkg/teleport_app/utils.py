import collections


# 数値出力は17桁
FORMAT_DIGITS = 17


def sorted_dict_by_key(unsorted_dict):
    return collections.OrderedDict(
        sorted(unsorted_dict.items(), key=lambda d: d[0]))


def format_real(value):
    return format(float(value), f'.{FORMAT_DIGITS}g')


def pprint_table(table, title='coefficients'):
    """ 係数表 {'ABC': 値} を表示 """
    print(f'{"="*25} {title} {"="*25}')
    for k, v in sorted_dict_by_key(table).items():
        print(f' {k:15}{format_real(v)}')
    print(f'{"*"*25}')
