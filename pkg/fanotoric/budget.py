"""Resource limits. Face lattices, Cayley structure searches and localization
sums all grow exponentially in the worst case, so every such computation takes
a :py:class:`.Budget` and gives up with :py:class:`.SearchBudgetExceeded`
rather than running away."""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)

class SearchBudgetExceeded(RuntimeError):
    """Raised when a computation needs more of some resource than its budget
    allows.

    :param str resource: The name of the exhausted resource.
    :param int limit: The limit that was exceeded."""

    def __init__(self, resource, limit):
        RuntimeError.__init__(
         self, "%s budget of %i exceeded" % (resource, limit)
        )
        self.resource = resource
        self.limit = limit



class Budget:
    """A set of resource limits, plus the number of worker threads that library
    functions may use. Budgets never change results, they only decide whether
    a result is computed at all.

    :param int max_faces: The most faces a face lattice may have.
    :param int max_nodes: The most search nodes a Cayley structure enumeration\
    may visit.
    :param int max_fixed_points: The most torus fixed points a localization\
    sum may have.
    :param int max_points: The most lattice points a bounding box enumeration\
    may scan.
    :param int threads: The number of worker threads.
    :raises TypeError: if any limit is not an integer.
    :raises ValueError: if any limit is not positive."""

    def __init__(self, max_faces=20000, max_nodes=200000,
                 max_fixed_points=200000, max_points=2000000, threads=1):
        self._limits = {}
        self.max_faces(max_faces)
        self.max_nodes(max_nodes)
        self.max_fixed_points(max_fixed_points)
        self.max_points(max_points)
        self.threads(threads)


    def __repr__(self):
        return "<Budget (%i faces, %i nodes, %i fixed points, %i threads)>" % (
         self._limits["faces"], self._limits["nodes"],
         self._limits["fixed points"], self._limits["threads"]
        )


    def _limit(self, name, value):
        if value is None:
            return self._limits[name]
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError("%s must be int, not '%s'" % (name, str(value)))
        if value < 1:
            raise ValueError("%s must be positive, not %i" % (name, value))
        self._limits[name] = value


    def max_faces(self, max_faces=None):
        """Returns or sets (if a value is provided) the face limit.

        :param int max_faces: If given, the limit will be set to this.
        :rtype: ``int``"""

        return self._limit("faces", max_faces)


    def max_nodes(self, max_nodes=None):
        """Returns or sets (if a value is provided) the Cayley search node
        limit.

        :param int max_nodes: If given, the limit will be set to this.
        :rtype: ``int``"""

        return self._limit("nodes", max_nodes)


    def max_fixed_points(self, max_fixed_points=None):
        """Returns or sets (if a value is provided) the fixed point limit.

        :param int max_fixed_points: If given, the limit will be set to this.
        :rtype: ``int``"""

        return self._limit("fixed points", max_fixed_points)


    def max_points(self, max_points=None):
        """Returns or sets (if a value is provided) the bounding box lattice
        point limit.

        :param int max_points: If given, the limit will be set to this.
        :rtype: ``int``"""

        return self._limit("points", max_points)


    def threads(self, threads=None):
        """Returns or sets (if a value is provided) the number of worker
        threads.

        :param int threads: If given, the thread count will be set to this.
        :rtype: ``int``"""

        return self._limit("threads", threads)


    def copy(self):
        """Returns an independent copy of this budget.

        :rtype: :py:class:`.Budget`"""

        return Budget(
         max_faces=self._limits["faces"], max_nodes=self._limits["nodes"],
         max_fixed_points=self._limits["fixed points"],
         max_points=self._limits["points"], threads=self._limits["threads"]
        )


    def check(self, resource, used):
        """Raises :py:class:`.SearchBudgetExceeded` if ``used`` is more than the
        limit for ``resource`` (one of ``"faces"``, ``"nodes"``,
        ``"fixed points"``, ``"points"``)."""

        limit = self._limits[resource]
        if used > limit:
            logger.debug("Budget exhausted: %s used %i of %i" % (resource, used, limit))
            raise SearchBudgetExceeded(resource, limit)


    def counter(self, resource):
        """Returns a thread safe :py:class:`.BudgetCounter` for the resource.

        :rtype: :py:class:`.BudgetCounter`"""

        return BudgetCounter(self, resource)


    def map(self, function, items):
        """Applies ``function`` to every item and returns the results in input
        order, using a thread pool when more than one thread is allowed.

        :rtype: ``list``"""

        items = list(items)
        if self._limits["threads"] == 1 or len(items) < 2:
            return [function(item) for item in items]
        with ThreadPoolExecutor(max_workers=self._limits["threads"]) as pool:
            return list(pool.map(function, items))



class BudgetCounter:
    """Counts units of one resource against a :py:class:`.Budget`."""

    def __init__(self, budget, resource):
        self._budget = budget
        self._resource = resource
        self._used = 0
        self._lock = threading.Lock()


    def __repr__(self):
        return "<BudgetCounter (%s: %i)>" % (self._resource, self._used)


    def used(self):
        return self._used


    def tick(self, amount=1):
        """Records ``amount`` more units, raising
        :py:class:`.SearchBudgetExceeded` once the limit is passed."""

        with self._lock:
            self._used += amount
            used = self._used
        self._budget.check(self._resource, used)



_default_budget = Budget()

def default_budget():
    """Returns the budget used when a function is not given one.

    :rtype: :py:class:`.Budget`"""

    return _default_budget
