import logging
from functools import wraps

import click

import tori.constants as cs
import tori.utilities as ut
import tori.catalog as ct
import tori.main as m


def handle_errors(f):
    """
    Decorate a command so that library errors print their message to stderr and exit with the matching exit code.
    """
    @wraps(f)
    def wrap(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ut.ParseError as e:
            code = cs.EXIT_PARSE_ERROR
            msg = e
        except ut.BudgetError as e:
            code = cs.EXIT_BUDGET_EXCEEDED
            msg = e
        except ut.UnknownLabelError as e:
            code = cs.EXIT_UNKNOWN_LABEL
            msg = e
        except ValueError as e:
            code = 1
            msg = e
        click.echo('Error: {!s}'.format(msg), err=True)
        raise SystemExit(code)
    return wrap

def resolve(group, cover_file=None):
    """
    Return the triple (group, label, cover) given by a group string or a group spec file.
    """
    if cover_file is not None:
        spec = m.read_group_spec(cover_file)
        return spec['group'], spec['label'], spec['cover']
    if group is None:
        raise ut.ParseError('Give a group with --group or --cover-file')
    G, label = m.parse_group(group)
    return G, label, None

def subgroup_or_none(G, subgroup):
    return None if subgroup is None else m.parse_subgroup(G, subgroup)

def emit(d, as_json, text):
    if as_json:
        click.echo(m.dumps(d), nl=False)
    else:
        click.echo(text)

group_option = click.option('-g', '--group', type=str, default=None,
  help="Group label such as 8T31, or '<degree>:<generator>;<generator>;...' in cycle notation")
subgroup_option = click.option('-s', '--subgroup', type=str, default=None,
  help="';'-separated generators of the subgroup H; defaults to the stabilizer of 1")
decomposition_option = click.option('-d', '--decomposition-group',
  'decomposition_groups', type=str, multiple=True,
  help="';'-separated generators of a decomposition group; may be repeated")
cover_option = click.option('--cover-file', type=click.Path(exists=True),
  default=None,
  help="Group spec file whose group replaces --group; if it has a cover, the obstruction is computed for the cover group and the preimage of H")
json_option = click.option('--json', 'as_json', is_flag=True, default=False,
  help="Print JSON instead of text")
subgroup_budget_option = click.option('-b', '--budget', type=int,
  default=cs.SUBGROUP_ORDER_BOUND,
  help="Largest group order for which all subgroups are enumerated")


@click.group()
@click.option('-v', '--verbose', count=True,
  help="Log progress at INFO level; repeat for DEBUG")
def tori(verbose):
    if verbose:
        logging.basicConfig(level=logging.DEBUG if verbose > 1
          else logging.INFO, format='%(name)s: %(message)s')

@tori.command(short_help="Compute H^1(G, J_{G/H})")
@group_option
@subgroup_option
@click.option('-n', '--degree', type=int, default=None,
  help="Run over every catalog group of this degree instead")
@json_option
@handle_errors
def h1(group, subgroup, degree, as_json):
    """
    Print the invariant factors of H^1(G, J_{G/H}) for the norm-one torus of G and H, or, with --degree, for every catalog group of that degree.
    """
    if degree is not None:
        rows = m.h1_table(degree)
        emit(rows, as_json, '\n'.join('{!s}: H1(G, J) = {!s}'.format(
          r['label'], ut.format_invariants(r['h1_J'])) for r in rows))
        return
    G, label, __ = resolve(group)
    d = m.h1_dict(G, subgroup_or_none(G, subgroup), label)
    emit(d, as_json, 'H1(G, J) = {!s}'.format(
      ut.format_invariants(d['h1_J'])))

@tori.command(short_help="Compute H^1 of the flabby class of J_{G/H}")
@group_option
@subgroup_option
@decomposition_option
@click.option('--reduce', is_flag=True, default=False,
  help="Greedily drop permutation summands of the resolution")
@click.option('--seed', type=int, default=None,
  help="Randomly perturb the fixed sublattice bases with this seed")
@subgroup_budget_option
@json_option
@handle_errors
def flabby(group, subgroup, decomposition_groups, reduce, seed, budget,
  as_json):
    """
    Build a flabby resolution 0 -> J -> P -> F -> 0 and print the invariant factors of H^1(G, F), which decide the retract rationality of the norm-one torus, and of H^1(Gv, F) for each decomposition group Gv (the local T(k_v)/R).
    """
    G, label, __ = resolve(group)
    dgs = [m.parse_subgroup(G, s) for s in decomposition_groups]
    d = m.flabby_dict(G, subgroup_or_none(G, subgroup), label, dgs,
      reduce=reduce, seed=seed, order_bound=budget)
    lines = ['H1(G, [J]^fl) = {!s}'.format(
      ut.format_invariants(d['flabby_class_h1']))]
    for s, inv in zip(decomposition_groups, d.get('local_flabby_class_h1',
      [])):
        lines.append('H1(<{!s}>, [J]^fl) = {!s}'.format(s,
          ut.format_invariants(inv)))
    emit(d, as_json, '\n'.join(lines))

@tori.command(short_help="Compute the first obstruction to the HNP")
@group_option
@subgroup_option
@decomposition_option
@cover_option
@json_option
@handle_errors
def obstruction(group, subgroup, decomposition_groups, cover_file, as_json):
    """
    Print the numerator Obs1N and the unramified denominator Dnr of the first obstruction, and the ramified denominator Dr for each decomposition group.

    With a cover file the computation runs on the cover group and the preimage of H; decomposition groups are then read inside the cover group.
    """
    G, label, cover = resolve(group, cover_file)
    H = subgroup_or_none(G, subgroup)
    if cover is not None:
        G, H = m.lift_to_cover(cover, H)
        label = None
    dgs = [m.parse_subgroup(G, s) for s in decomposition_groups]
    d = m.obstruction_dict(G, H, label, dgs)
    emit(d, as_json, '\n'.join(m.format_obstruction(d['obstruction'])))

@tori.command(short_help="Run the obstruction over all decomposition groups")
@group_option
@subgroup_option
@cover_option
@subgroup_budget_option
@json_option
@handle_errors
def survey(group, subgroup, cover_file, budget, as_json):
    """
    Compute Dr for every subgroup Gv of G and split the subgroups into those for which Dr is the whole numerator (HNP holds whenever some decomposition group lies in this set) and the others.
    """
    G, label, cover = resolve(group, cover_file)
    H = subgroup_or_none(G, subgroup)
    if cover is not None:
        G, H = m.lift_to_cover(cover, H)
        label = None
    d = m.survey_dict(G, H, label, order_bound=budget)
    lines = [
      'Obs1N = {!s}'.format(ut.format_invariants(d['ker']['invariants'])),
      'Subgroups: {!s}'.format(d['num_subgroups']),
      'Dr = Obs1N for:',
      ]
    lines.extend('  {!s}: {!s}'.format(c['description'], c['count'])
      for c in d['true_set'])
    lines.append('Dr != Obs1N for:')
    lines.extend('  {!s}: {!s}'.format(c['description'], c['count'])
      for c in d['false_set'])
    emit(d, as_json, '\n'.join(lines))

@tori.command(short_help="Compute H^n(G, Z) by the bar resolution")
@group_option
@click.option('-n', type=click.IntRange(1, 3), default=3,
  help="Cohomological degree; H^3(G, Z) is the Schur multiplier")
@click.option('-b', '--budget', type=int, default=cs.HN_BUDGET,
  help="Largest number of cochain cells (|G| - 1)^(n + 1)")
@json_option
@handle_errors
def h3z(group, n, budget, as_json):
    """
    Print the invariant factors of H^n(G, Z) with trivial action, by default for n = 3.
    """
    G, label, __ = resolve(group)
    d = m.hn_dict(G, n, label, budget=budget)
    emit(d, as_json, 'H{!s}(G, Z) = {!s}'.format(n,
      ut.format_invariants(d['invariants'])))

@tori.command(short_help="Report all invariants of a norm-one torus")
@group_option
@subgroup_option
@decomposition_option
@click.option('--no-flabby', is_flag=True, default=False,
  help="Skip the flabby resolution")
@click.option('--reduce', is_flag=True, default=False,
  help="Greedily drop permutation summands of the resolution")
@subgroup_budget_option
@json_option
@handle_errors
def report(group, subgroup, decomposition_groups, no_flabby, reduce, budget,
  as_json):
    """
    Print H^1(G, J), H^1(G, [J]^fl), the first obstruction, the Tamagawa number when Sha is known to vanish, and the embedded table entry of a labelled group.
    """
    G, label, __ = resolve(group)
    dgs = [m.parse_subgroup(G, s) for s in decomposition_groups]
    d = m.report_dict(G, subgroup_or_none(G, subgroup), label, dgs,
      flabby=not no_flabby, reduce=reduce, order_bound=budget)
    emit(d, as_json, m.format_report(d))

@tori.command(short_help="Look up the embedded table of obstructed groups")
@group_option
@json_option
@handle_errors
def table1(group, as_json):
    """
    Print whether the Hasse norm principle always holds for the transitive group with the given label, or list every group for which it can fail.
    """
    if group is None:
        d = m.table1_dict()
        emit(d, as_json, '\n'.join('{!s}: {!s}'.format(r['label'],
          ut.format_invariants(r['invariants'])) for r in d['rows']))
        return
    d = m.table1_dict(group.strip())
    emit(d, as_json, m.format_table1(d))

@tori.command(short_help="List the group catalog")
@click.option('-n', '--degree', type=int, default=None,
  help="Only list groups of this degree")
@json_option
@handle_errors
def catalog(degree, as_json):
    """
    List the catalog labels with their degree, order and provenance.
    """
    entries = [ct.catalog_entry(x) for x in ct.catalog_labels(degree)]
    rows = [dict(e.to_dict(), provenance=e.provenance) for e in entries]
    emit(rows, as_json, '\n'.join('{!s} {!s} {!s} {!s}'.format(r['label'],
      r['degree'], r['order'], r['provenance']) for r in rows))
