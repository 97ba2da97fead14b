"""Problem files and reports.

A problem file is a JSON object::

    {
     "points": [[2, 0, 0, ...], ...],
     "basis": {"H": {"normal": [-1, -1, -1, -1, -1]}, "E": {"normal": [1, 1, 1, 0, 0]}},
     "classes": ["8H-3E"],
     "k": 1,
     "task": "analyze"
    }

The columns of ``points`` are the configuration. A divisor is given as a list
of facet coefficients (in canonical facet order), as
``{"normal": [...], "coefficient": n}`` naming one facet by its primitive
inner normal, as ``{"facets": [...]}`` summing other divisor specs, or as an
expression such as ``"8H-3E"`` over the names declared in ``basis``."""

import json
import logging
import re
from numerus import is_numeric
from .budget import SearchBudgetExceeded, default_budget
from .polytopes import PointConfiguration, NotSmoothError, normalize_configuration, is_smooth
from .divisors import ToricDivisor, is_effective
from .cayley import maximal_cayley_structures
from .analysis import ExpectedDimensionInput, check_hypotheses, expected_dimension
from .chow import full_count

logger = logging.getLogger(__name__)

TASKS = ("faces", "cayley", "smooth", "degrees", "expected-dim", "check", "count", "analyze")
CLASS_TASKS = ("degrees", "expected-dim", "check", "count", "analyze")
MODES = ("theorem", "corollary")
KEYS = ("points", "basis", "classes", "k", "task", "mode", "name")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_HYPOTHESES = 3
EXIT_BUDGET = 4

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_EXPRESSION = re.compile(r"(?:[+-]?\d*\*?[A-Za-z_][A-Za-z0-9_]*)+")
_TERM = re.compile(r"([+-]?)(\d*)\*?([A-Za-z_][A-Za-z0-9_]*)")

class ProblemError(ValueError):
    """Raised when a problem file is invalid. All problems found are listed
    in ``errors``, not just the first.

    :param list errors: The error messages."""

    def __init__(self, errors):
        ValueError.__init__(self, "; ".join(errors))
        self.errors = list(errors)



def _is_integral(value):
    return is_numeric(value) and not isinstance(value, bool) and \
     not isinstance(value, complex) and int(value) == value


def _check_spec(spec, where, errors, names):
    if isinstance(spec, str):
        compact = spec.replace(" ", "")
        if not _EXPRESSION.fullmatch(compact):
            errors.append("%s: cannot parse class expression '%s'" % (where, spec))
            return
        for _, _, name in _TERM.findall(compact):
            if name not in names:
                errors.append("%s: unknown class name '%s'" % (where, name))
    elif isinstance(spec, list):
        if not all(_is_integral(v) for v in spec):
            errors.append("%s: facet coefficients must be integers" % where)
    elif isinstance(spec, dict):
        if "facets" in spec:
            if not isinstance(spec["facets"], list):
                errors.append("%s: 'facets' must be a list" % where)
            else:
                for i, part in enumerate(spec["facets"]):
                    _check_spec(part, "%s.facets[%i]" % (where, i), errors, names)
        elif "normal" in spec:
            normal = spec["normal"]
            if not isinstance(normal, list) or not all(_is_integral(v) for v in normal):
                errors.append("%s: 'normal' must be a list of integers" % where)
            if not _is_integral(spec.get("coefficient", 1)):
                errors.append("%s: 'coefficient' must be an integer" % where)
        else:
            errors.append("%s: a divisor needs 'normal' or 'facets'" % where)
    else:
        errors.append("%s: cannot read divisor '%s'" % (where, str(spec)))



class ProblemFile:
    """A validated problem. The configuration is normalized, and the classes
    live on the normalized configuration.

    :param dict source: The decoded JSON object.
    :param PointConfiguration original: The configuration as given.
    :param list classes: The resolved :py:class:`.DivisorClass` objects."""

    def __init__(self, source, original, classes, warnings=None):
        self._source = source
        self._original = original
        self._configuration, self._mapping = normalize_configuration(original)
        self._classes = list(classes)
        self._warnings = list(warnings or [])


    def __repr__(self):
        return "<ProblemFile '%s' (%i points, k=%i)>" % (
         self.task(), len(self._original), self.k()
        )


    def source(self):
        return dict(self._source)


    def name(self):
        return self._source.get("name")


    def task(self):
        return self._source.get("task", "analyze")


    def k(self):
        return self._source.get("k", 1)


    def mode(self):
        return self._source.get("mode")


    def original(self):
        """Returns the configuration as written in the file.

        :rtype: :py:class:`.PointConfiguration`"""

        return self._original


    def configuration(self):
        """Returns the normalized configuration everything is computed on.

        :rtype: :py:class:`.PointConfiguration`"""

        return self._configuration


    def mapping(self):
        return self._mapping


    def classes(self):
        return list(self._classes)


    def class_labels(self):
        return [
         c if isinstance(c, str) else json.dumps(c, sort_keys=True)
         for c in self._source.get("classes", [])
        ]


    def warnings(self):
        return list(self._warnings)


    def original_points(self, indices):
        return [list(self._original.point(i)) for i in indices]



def _resolve(spec, original, normalized, basis, where, errors):
    facets = original.facets()
    if isinstance(spec, str):
        total = None
        for sign, number, name in _TERM.findall(spec.replace(" ", "")):
            factor = int(number) if number else 1
            if sign == "-":
                factor = -factor
            if basis.get(name) is None:
                return None
            term = factor * basis[name]
            total = term if total is None else total + term
        return total
    if isinstance(spec, list):
        if len(spec) != len(facets):
            errors.append(
             "%s: %i facet coefficients given, but there are %i facets" % (
              where, len(spec), len(facets)
             )
            )
            return None
        coefficients = {frozenset(f.members()): int(a) for f, a in zip(facets, spec)}
    elif "facets" in spec:
        parts = [
         _resolve(part, original, normalized, basis, "%s.facets[%i]" % (where, i), errors)
         for i, part in enumerate(spec["facets"])
        ]
        if any(part is None for part in parts) or not parts:
            if not parts:
                errors.append("%s: 'facets' is empty" % where)
            return None
        total = parts[0]
        for part in parts[1:]:
            total = total + part
        return total
    else:
        normal = tuple(int(v) for v in spec["normal"])
        matches = [f for f in facets if original.facet_inequality(f)[0] == normal]
        if not matches:
            errors.append("%s: no facet has inner normal %s" % (where, str(list(normal))))
            return None
        coefficients = {frozenset(matches[0].members()): int(spec.get("coefficient", 1))}
    return ToricDivisor(normalized, [
     coefficients.get(frozenset(f.members()), 0) for f in normalized.facets()
    ])


def parse_problem(data, task=None, k=None, mode=None, budget=None):
    """Parses and validates a problem file. ``task``, ``k`` and ``mode``, when
    given, replace the values in the file.

    :param data: The file's contents, as ``bytes`` or ``str``.
    :param str task: Overrides the task.
    :param int k: Overrides k.
    :param str mode: Overrides the hypothesis mode of the ``check`` task.
    :param Budget budget: Limits the geometry needed to resolve classes.
    :rtype: :py:class:`.ProblemFile`
    :raises ProblemError: listing every validation error found."""

    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ProblemError(["malformed file: %s" % str(e)])
    try:
        source = json.loads(data)
    except ValueError as e:
        raise ProblemError(["malformed JSON: %s" % str(e)])
    if not isinstance(source, dict):
        raise ProblemError(["a problem must be a JSON object"])
    errors, warnings = [], []
    for key in sorted(source):
        if key not in KEYS:
            warnings.append("unknown key '%s' ignored" % key)
    if task is not None:
        if "task" in source and source["task"] != task:
            logger.warning("Task '%s' replaces '%s' from the file" % (task, source["task"]))
        source["task"] = task
    if k is not None:
        if "k" in source and source["k"] != k:
            logger.warning("k=%s replaces k=%s from the file" % (str(k), str(source["k"])))
        source["k"] = k
    if mode is not None:
        source["mode"] = mode

    points = source.get("points")
    columns = []
    if not isinstance(points, list) or not all(isinstance(row, list) for row in points):
        errors.append("'points' must be a matrix (a list of rows)")
    elif not points or not points[0]:
        errors.append("empty configuration")
    elif len(set(len(row) for row in points)) != 1:
        errors.append("rows of 'points' have different lengths")
    elif not all(_is_integral(v) for row in points for v in row):
        errors.append("'points' entries must be integers")
    else:
        columns = [tuple(int(v) for v in column) for column in zip(*points)]
        if len(set(columns)) != len(columns):
            errors.append("'points' has repeated columns")
    if source.get("task", "analyze") not in TASKS:
        errors.append("unknown task '%s'" % str(source.get("task")))
    k_value = source.get("k", 1)
    if not isinstance(k_value, int) or isinstance(k_value, bool) or k_value < 0:
        errors.append("k must be a non-negative integer, not '%s'" % str(k_value))
    if source.get("mode") is not None and source["mode"] not in MODES:
        errors.append("unknown mode '%s'" % str(source["mode"]))
    basis = source.get("basis", {})
    if not isinstance(basis, dict):
        errors.append("'basis' must be an object")
        basis = {}
    for name in sorted(basis):
        if not _NAME.fullmatch(name):
            errors.append("basis name '%s' is not a valid name" % name)
        elif isinstance(basis[name], str):
            errors.append("basis.%s: basis classes cannot be expressions" % name)
        else:
            _check_spec(basis[name], "basis.%s" % name, errors, ())
    classes = source.get("classes", [])
    if not isinstance(classes, list):
        errors.append("'classes' must be a list")
        classes = []
    for i, spec in enumerate(classes):
        _check_spec(spec, "classes[%i]" % i, errors, set(basis))
    if errors:
        raise ProblemError(errors)

    budget = budget or default_budget()
    original = PointConfiguration(columns)
    original.faces(budget=budget)
    normalized = normalize_configuration(original)[0]
    resolved_basis = {
     name: _resolve(basis[name], original, normalized, {}, "basis.%s" % name, errors)
     for name in sorted(basis)
    }
    resolved = []
    for i, spec in enumerate(classes):
        divisor = _resolve(spec, original, normalized, resolved_basis, "classes[%i]" % i, errors)
        if divisor is not None:
            resolved.append(divisor.divisor_class())
    if not errors and source.get("task", "analyze") in CLASS_TASKS:
        if is_smooth(normalized):
            for i, c in enumerate(resolved):
                if c.is_zero():
                    errors.append("classes[%i]: the class is trivial" % i)
                elif not is_effective(normalized, c, budget):
                    errors.append("classes[%i]: the class is not effective" % i)
    if errors:
        raise ProblemError(errors)
    return ProblemFile(source, original, resolved, warnings)



class Report:
    """The outcome of running a problem. It is a thin wrapper around a
    JSON-ready ``dict``, which is also what the text format is built from.

    :param dict data: The report contents.
    :param int exit_code: The process exit code this report implies."""

    def __init__(self, data, exit_code=EXIT_OK):
        self._data = data
        self._exit_code = exit_code


    def __repr__(self):
        return "<Report '%s' (exit code %i)>" % (self._data.get("task"), self._exit_code)


    def __eq__(self, other):
        return isinstance(other, Report) and self._data == other._data \
         and self._exit_code == other._exit_code


    @classmethod
    def from_dict(cls, data):
        """Rebuilds a report from :py:meth:`to_dict` output.

        :rtype: :py:class:`.Report`"""

        data = dict(data)
        exit_code = data.pop("exit_code", EXIT_OK)
        return cls(data, exit_code)


    def exit_code(self):
        return self._exit_code


    def to_dict(self):
        data = dict(self._data)
        data["exit_code"] = self._exit_code
        return data


    def to_json(self):
        """Returns the report as a JSON document with sorted keys.

        :rtype: ``str``"""

        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"


    def to_text(self):
        """Returns a human-readable view of the report.

        :rtype: ``str``"""

        data = self.to_dict()
        lines = ["task: %s" % data.get("task")]
        if "k" in data:
            lines.append("k: %s" % str(data["k"]))
        if data.get("error"):
            lines.append("error: %s" % data["error"])
        for key in ("smooth", "dimension", "points"):
            if key in data:
                lines.append("%s: %s" % (key, str(data[key])))
        for face in data.get("faces", []):
            lines.append("face dim %i normal %s: %s" % (
             face["dim"], str(face["normal"]), _points_text(face["points"])
            ))
        for number, component in enumerate(data.get("components", []), start=1):
            structure = component["structure"]
            lines.append("component %i: length %i on a face of dimension %i" % (
             number, structure["length"], structure["face_dimension"]
            ))
            for i, fiber in enumerate(structure["fibers"]):
                lines.append("  fiber %i: %s" % (i, _points_text(fiber)))
            for key in ("deltas", "phi", "component_dimension", "fixed_planes", "count", "reason"):
                if key in component:
                    value = component[key]
                    if isinstance(value, list):
                        value = " ".join(str(v) for v in value)
                    lines.append("  %s: %s" % (key, str(value)))
            for mode in MODES:
                if mode in component:
                    report = component[mode]
                    lines.append("  %s conditions:" % mode)
                    for condition in report["conditions"]:
                        lines.append("    %-20s %s" % (condition["name"], condition["verdict"]))
                    lines.append("  %s verdicts (for general X):" % mode)
                    for name in sorted(report["verdicts"]):
                        lines.append("    %-24s %s" % (name, report["verdicts"][name]))
        if "total" in data:
            lines.append("total: %s" % str(data["total"]))
        for warning in data.get("warnings", []):
            lines.append("warning: %s" % warning)
        lines.append("exit code: %i" % data["exit_code"])
        return "\n".join(lines) + "\n"



def _points_text(points):
    return " ".join("(%s)" % ",".join(str(v) for v in point) for point in points)


def _structure_dict(problem, structure):
    data = structure.to_dict()
    data["fibers"] = [problem.original_points(block) for block in structure.blocks()]
    return data


def _components(problem, budget, mode=None, counts=False):
    configuration, k = problem.configuration(), problem.k()
    records = []
    if counts:
        result = full_count(configuration, problem.classes(), k, budget)
        for component in result.components():
            record = {
             "structure": _structure_dict(problem, component.structure()),
             "count": component.count()
            }
            record.update(_summary(component.theorem_report()))
            record["theorem"] = component.theorem_report().to_dict()
            record["corollary"] = component.corollary_report().to_dict()
            if component.reason() is not None:
                record["reason"] = component.reason()
            records.append(record)
        return records, result.total()
    for structure in maximal_cayley_structures(configuration, k, budget):
        data = ExpectedDimensionInput(configuration, structure, problem.classes(), k, budget)
        record = {"structure": _structure_dict(problem, structure)}
        if mode is None:
            record["deltas"] = list(data.deltas())
            record["phi"] = expected_dimension(data)
        else:
            for checked in (MODES if mode == "both" else (mode,)):
                report = check_hypotheses(data, checked, budget)
                record.update(_summary(report))
                record[checked] = report.to_dict()
        records.append(record)
    return records, None


def _summary(report):
    data = report.to_dict()
    return {
     "deltas": data["deltas"], "phi": data["phi"],
     "component_dimension": data["component_dimension"],
     "fixed_planes": data["fixed_planes"]
    }


def run(problem, budget=None):
    """Runs a problem's task.

    :param ProblemFile problem: The validated problem.
    :param Budget budget: The resource budget.
    :returns: The report, whose exit code is 0 on success, 3 when the\
    hypotheses needed for a demanded count fail, and 4 when the budget is\
    exceeded.
    :rtype: :py:class:`.Report`"""

    budget = budget or default_budget()
    task, k = problem.task(), problem.k()
    data = {"task": task, "k": k, "warnings": problem.warnings()}
    if problem.name() is not None:
        data["name"] = problem.name()
    data["classes"] = problem.class_labels()
    exit_code = EXIT_OK
    try:
        configuration = problem.configuration()
        data["points"] = len(configuration)
        data["dimension"] = configuration.ambient_rank()
        if task == "faces":
            data["faces"] = [{
             "dim": face.dim(), "points": problem.original_points(face.members()),
             "normal": list(face.normal()) if face.normal() is not None else None
            } for face in problem.original().faces(budget=budget)]
        elif task == "cayley":
            data["components"] = [
             {"structure": _structure_dict(problem, structure)}
             for structure in maximal_cayley_structures(configuration, k, budget)
            ]
        elif task == "smooth":
            data["smooth"] = is_smooth(configuration)
        elif task in ("degrees", "expected-dim"):
            data["components"] = _components(problem, budget)[0]
        elif task == "check":
            data["components"] = _components(problem, budget, problem.mode() or "both")[0]
        else:
            data["components"], data["total"] = _components(problem, budget, counts=True)
            if task == "count" and data["total"] is None:
                exit_code = EXIT_HYPOTHESES
                data["error"] = "some component has no count"
    except SearchBudgetExceeded as e:
        logger.debug("Budget exceeded running '%s'" % task)
        data["error"] = str(e)
        data.pop("components", None)
        exit_code = EXIT_BUDGET
    except NotSmoothError as e:
        data["error"] = str(e)
        data.pop("components", None)
        exit_code = EXIT_HYPOTHESES
    return Report(data, exit_code)
