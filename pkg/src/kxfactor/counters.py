"""Global counter of base-field operations.

Every FieldElem multiplication/addition/inversion bumps the counter, so a
caller can snapshot around a pipeline run and measure how the exact
arithmetic scales.  Counting is always on; the increments are cheap
compared to the coefficient arithmetic they count.
"""


class OpCounter:
    __slots__ = ("add", "mul", "inv")

    def __init__(self):
        self.add = 0
        self.mul = 0
        self.inv = 0

    def reset(self):
        self.add = 0
        self.mul = 0
        self.inv = 0

    @property
    def total(self):
        return self.add + self.mul + self.inv

    def snapshot(self):
        return (self.add, self.mul, self.inv)

    def delta_since(self, snap):
        return (self.add - snap[0]) + (self.mul - snap[1]) + (self.inv - snap[2])


OPS = OpCounter()
