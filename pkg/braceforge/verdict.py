from .verdict_status import VerdictStatus


class Verdict:
    """Outcome of an exhaustive check: HOLDS, or FAILS with the first violating tuple in index order."""

    def __init__(self, status, witness=None, message=''):
        self.status = status
        self.witness = None if witness is None else tuple(int(x) for x in witness)
        self.message = message

    @classmethod
    def holds(cls, message=''):
        return cls(VerdictStatus.HOLDS, message=message)

    @classmethod
    def fails(cls, *witness, message=''):
        return cls(VerdictStatus.FAILS, witness, message)

    @property
    def ok(self):
        return self.status == VerdictStatus.HOLDS

    def __bool__(self):
        return self.ok

    def __eq__(self, other):
        if not isinstance(other, Verdict):
            return NotImplemented
        return self.status == other.status and self.witness == other.witness

    def __hash__(self):
        return hash((self.status, self.witness))

    def to_params(self):
        return {'status': self.status, 'witness': None if self.witness is None else list(self.witness)}

    def __str__(self):
        return "Verdict:\n--Status: {}\n--Witness: {}\n".format(self.status, self.witness)

    __repr__ = __str__
