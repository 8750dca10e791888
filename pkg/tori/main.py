"""
Plumbing between the command line and the library: group spec files, group and subgroup strings, and the assembly of results into JSON-ready dictionaries and text.

CONVENTIONS:
    - A group string is either a catalog label such as '8T31' or '<degree>:<generator>;<generator>;...' in 1-based cycle notation, e.g. '4:(1,2)(3,4);(1,3)(2,4)'
    - A subgroup string is a ';'-separated list of generators interpreted inside a given group; '()' and '1' denote the trivial subgroup
    - Output dictionaries contain only lists, integers, strings and ``None`` and are dumped with sorted keys, so that output is byte-deterministic
"""
from pathlib import Path
import json
import re
import logging

import tori.constants as cs
import tori.permgrp as pg
import tori.glat as gl
import tori.cohom as co
import tori.flabby as fl
import tori.hnp as hnp
import tori.catalog as ct
from tori.utilities import ParseError, format_invariants, parse_label


logger = logging.getLogger(__name__)

LABEL_PATTERN = re.compile(r'\s*\d+T\d+\s*')


# ---------------------------------------------------------------------------
# Group and subgroup strings
# ---------------------------------------------------------------------------
def parse_group(string):
    """
    Parse a group string and return the pair ``(group, label)``, where ``label`` is ``None`` unless the string is a catalog label.
    Raise a ``ParseError`` if the string is malformed and an ``UnknownLabelError`` if the label is not in the catalog.

    EXAMPLES:

    >>> G, label = parse_group('4:(1,2)(3,4);(1,3)(2,4)')
    >>> G.order, label
    (4, None)
    """
    string = str(string).strip()
    if LABEL_PATTERN.fullmatch(string):
        label = '{!s}T{!s}'.format(*parse_label(string))
        return ct.catalog_get(label), label
    degree, sep, gens = string.partition(':')
    if not sep or not degree.strip().isdigit():
        raise ParseError('{!r} is neither a group label nor of the form '
          '<degree>:<generator>;...'.format(string))
    gens = [g for g in gens.split(';') if g.strip()]
    return pg.group_from_generators(int(degree), gens), None

def parse_subgroup(G, string):
    """
    Return the subgroup of ``G`` generated by the elements in the given subgroup string.
    Raise a ``ParseError`` on malformed input and a ``ValueError`` if a generator does not lie in ``G``.
    """
    string = str(string).strip()
    if string in ('', '1', '()'):
        return pg.trivial_subgroup(G)
    gens = [g for g in string.split(';') if g.strip()]
    return pg.generated_subgroup(G, gens)

def torus_lattice(G, H=None):
    """
    Return the Chevalley module J_{G/H}; with ``H`` absent, ``G`` must be transitive and the point stabilizer is used.
    """
    if H is None:
        return gl.norm1_lattice(G)
    return gl.chevalley_lattice(G, H)


# ---------------------------------------------------------------------------
# Group spec files
# ---------------------------------------------------------------------------
def group_spec_from_dict(data):
    """
    Build a group spec from a dictionary in the group spec file format and return a dictionary with keys

    - ``'label'``: string or ``None``
    - ``'group'``: ``PermGroup``
    - ``'cover'``: ``GroupHom`` from the cover group onto the group, or ``None``

    Raise a ``ParseError`` if the data is malformed, if the recorded order is wrong, or if the cover map is not a surjective homomorphism.
    """
    if not isinstance(data, dict):
        raise ParseError('Group spec must be a JSON object')
    for key in ['degree', 'generators']:
        if key not in data:
            raise ParseError('Group spec lacks {!r}'.format(key))
    if not isinstance(data['degree'], int) or\
      not isinstance(data['generators'], list):
        raise ParseError('Group spec degree must be an integer and '
          'generators a list')
    G = pg.group_from_generators(data['degree'], data['generators'])
    if 'order' in data and data['order'] != G.order:
        raise ParseError('Generators give a group of order {!s}, '
          'not {!s}'.format(G.order, data['order']))
    cover = None
    if data.get('cover') is not None:
        c = data['cover']
        try:
            cover = ct.make_cover(G, c['degree'], c['generators'],
              c['epi_images'])
        except KeyError as e:
            raise ParseError('Cover lacks {!s}'.format(e))
        except ParseError:
            raise
        except ValueError as e:
            raise ParseError('Invalid cover: {!s}'.format(e))
    return {'label': data.get('label'), 'group': G, 'cover': cover}

def group_spec_to_dict(spec):
    """
    Inverse of :func:`group_spec_from_dict`.
    """
    G = spec['group']
    result = {}
    if spec.get('label') is not None:
        result['label'] = spec['label']
    result['degree'] = G.degree
    result['generators'] = [str(g) for g in G.generators]
    result['order'] = G.order
    cover = spec.get('cover')
    if cover is not None:
        result['cover'] = {
          'degree': cover.source.degree,
          'generators': [str(g) for g in cover.generators],
          'epi_images': [str(t) for t in cover.images],
          }
    return result

def read_group_spec(path):
    """
    Read the UTF-8 JSON group spec file at ``path`` and return the dictionary of :func:`group_spec_from_dict`.
    Raise a ``ParseError`` if the file cannot be read or parsed.
    """
    try:
        with Path(path).open(encoding='utf-8') as src:
            data = json.load(src)
    except (OSError, ValueError) as e:
        raise ParseError('Could not read group spec {!s}: {!s}'.format(path,
          e))
    return group_spec_from_dict(data)

def write_group_spec(spec, path):
    """
    Write the given group spec dictionary (in the format returned by :func:`read_group_spec`) to ``path`` as JSON.
    """
    with Path(path).open('w', encoding='utf-8') as tgt:
        tgt.write(dumps(group_spec_to_dict(spec)))

def lift_to_cover(cover, H=None):
    """
    Given a cover ``GroupHom`` onto a group G and a subgroup ``H`` of G (default the stabilizer of 1), return the pair (cover group, preimage of ``H``).
    """
    G = cover.target
    if H is None:
        H = pg.stabilizer(G, 1)
    return cover.source, cover.preimage(H)


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------
def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'

def group_dict(G, label=None):
    return {
      'label': label,
      'degree': G.degree,
      'order': G.order,
      'generators': [str(g) for g in G.generators],
      }

def subgroup_list(S):
    return [str(g) for g in S.generators]

def h1_dict(G, H=None, label=None):
    J = torus_lattice(G, H)
    return {'group': group_dict(G, label), 'h1_J': co.h1(G, J).invariants}

def h1_table(degree):
    """
    Return a list of dictionaries with keys 'label' and 'h1_J', one for every catalog group of the given degree.
    """
    rows = []
    for label in ct.catalog_labels(degree):
        G = ct.catalog_get(label)
        rows.append({'label': label,
          'h1_J': co.h1(G, gl.norm1_lattice(G)).invariants})
        logger.info('%s: %s', label, rows[-1]['h1_J'])
    return rows

def flabby_dict(G, H=None, label=None, decomposition_groups=(),
  reduce=False, seed=None, order_bound=cs.SUBGROUP_ORDER_BOUND):
    J = torus_lattice(G, H)
    resolution = fl.flabby_resolution(J, reduce=reduce, seed=seed,
      order_bound=order_bound)
    result = {
      'group': group_dict(G, label),
      'flabby_class_h1': fl.flabby_class_h1(J, resolution=resolution),
      'permutation_part': [[K.order, k]
        for K, k in resolution.permutation_part],
      'flabby_rank': resolution.flabby_part.rank,
      }
    if decomposition_groups:
        result['local_flabby_class_h1'] = [fl.flabby_class_h1(J, Gv,
          resolution=resolution) for Gv in decomposition_groups]
    return result

def obstruction_dict(G, H=None, label=None, decomposition_groups=()):
    """
    Return a dictionary with the group and the numerator 'ker', the unramified denominator 'dnr' and the ramified denominators 'dr' (one per decomposition group) of the first obstruction.
    """
    ker = hnp.first_obstruction_n(G, H).ker
    dnr = hnp.first_obstruction_dnr(G, H)
    drs = [hnp.first_obstruction_dr(G, Gv, H) for Gv in decomposition_groups]
    return {
      'group': group_dict(G, label),
      'obstruction': {
        'ker': ker.to_dict(),
        'dnr': dnr.to_dict(),
        'dr': [dict(dr.to_dict(), decomposition_group=subgroup_list(Gv))
          for Gv, dr in zip(decomposition_groups, drs)],
        },
      }

def survey_dict(G, H=None, label=None,
  order_bound=cs.SUBGROUP_ORDER_BOUND):
    survey = hnp.hnp_survey(G, H, order_bound=order_bound)

    def collected(subgroups):
        return [{'description': name, 'count': n}
          for name, n in survey.collected(subgroups)]

    return {
      'group': group_dict(G, label),
      'ker': survey.ker.to_dict(),
      'num_subgroups': len(survey.per_subgroup),
      'true_set': collected(survey.true_set),
      'false_set': collected(survey.false_set),
      'minimal_true_subgroups': [subgroup_list(S)
        for S in survey.minimal_true_subgroups],
      }

def hn_dict(G, n=3, label=None, budget=cs.HN_BUDGET):
    return {'group': group_dict(G, label), 'n': n,
      'invariants': co.hn_trivial_z(G, n, budget=budget).invariants}

def report_dict(G, H=None, label=None, decomposition_groups=(), flabby=True,
  reduce=False, order_bound=cs.SUBGROUP_ORDER_BOUND):
    """
    Return :func:`hnp.report` as a dictionary with an extra key 'group'.
    """
    rep = hnp.report(G, H, label=label,
      decomposition_groups=decomposition_groups, flabby=flabby, reduce=reduce,
      order_bound=order_bound)
    result = rep.to_dict()
    for dr, Gv in zip(result['obstruction']['dr'], decomposition_groups):
        dr['decomposition_group'] = subgroup_list(Gv)
    result['group'] = group_dict(G, label)
    return result

def table1_dict(label=None):
    """
    Return the embedded table entry of the given label, or all obstructed rows if no label is given.
    """
    if label is not None:
        return dict(hnp.table1_lookup(label), label=label)
    rows = sorted(cs.TABLE1.items(), key=lambda x: parse_label(x[0]))
    return {'rows': [{'label': k, 'invariants': list(v)} for k, v in rows]}


# ---------------------------------------------------------------------------
# Text
# ---------------------------------------------------------------------------
def format_group(d):
    name = d['label'] or 'G'
    return '{!s} (degree {!s}, order {!s})'.format(name, d['degree'],
      d['order'])

def format_obstruction(ob):
    lines = [
      'Obs1N = {!s}'.format(format_invariants(ob['ker']['invariants'])),
      'Dnr = {!s}'.format(format_invariants(ob['dnr']['invariants'])),
      ]
    for dr in ob['dr']:
        gens = ';'.join(dr['decomposition_group']) or '1'
        lines.append('Dr(<{!s}>) = {!s}'.format(gens,
          format_invariants(dr['invariants'])))
    return lines

def format_table1(t):
    if t['status'] == 'obstructed':
        return '{!s}: HNP can fail, H1(G, [J]^fl) = {!s}'.format(t['label'],
          format_invariants(t['invariants']))
    if t['status'] == 'holds-always':
        return '{!s}: HNP always holds'.format(t['label'])
    return '{!s}: not covered by the table'.format(t['label'])

def format_report(d):
    """
    Return the text form of :func:`report_dict`.
    """
    lines = [
      'Group: {!s}'.format(format_group(d['group'])),
      'H1(G, J) = {!s}'.format(format_invariants(d['h1_J'])),
      ]
    if d['flabby_class_h1'] is not None:
        lines.append('H1(G, [J]^fl) = {!s}'.format(
          format_invariants(d['flabby_class_h1'])))
    if d.get('local_flabby_class_h1') is not None:
        lines.append('H1(Gv, [J]^fl) = {!s}'.format(
          format_invariants(d['local_flabby_class_h1'])))
    lines.extend(format_obstruction(d['obstruction']))
    lines.append('Tamagawa numerator = {!s}'.format(d['tamagawa_numerator']))
    tau = d['tamagawa_number']
    lines.append('Tamagawa number = {!s}'.format('unknown' if tau is None
      else tau))
    if d['table1'] is not None:
        lines.append(format_table1(dict(d['table1'],
          label=d['group']['label'])))
    return '\n'.join(lines)
