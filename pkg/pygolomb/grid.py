# -*- coding: utf-8 -*-

import itertools

from .recurrence import GolombParams

class ParameterGrid:
    """
    Ordered collection of (j, s, lambda) cells
    """
    def __init__(self, _name='unknown'):
        self.cells = []
        self.name = _name

    def __str__(self):
        res = "ParameterGrid: %s\n" % self.name
        for cell in self.cells:
            res += " j=%i s=%i lambda=%i\n" % (cell.j, cell.s, cell.lam)

        return res

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def add_cell(self, j, s, lam):
        self.cells.append(GolombParams(j, s, lam))

    def add_ranges(self, js, ss, lams):
        """
        Add the product of the given ranges, ordered by j, then s, then lambda
        """
        for j, s, lam in itertools.product(js, ss, lams):
            self.add_cell(j, s, lam)

        return self

    @classmethod
    def build(cls, name, js, ss, lams):
        return cls(name).add_ranges(js, ss, lams)

def tree_grid():
    """
    j, lambda in [1,3] and s in [0,3]
    """
    return ParameterGrid.build('tree', range(1, 4), range(0, 4), range(1, 4))

def weight_grid():
    """
    j, lambda in [1,4] and s in [0,4]
    """
    return ParameterGrid.build('weight', range(1, 5), range(0, 5), range(1, 5))

def lambda1_grid():
    """
    j in [1,4], s in [0,4] and lambda = 1
    """
    return ParameterGrid.build('lambda1', range(1, 5), range(0, 5), [1])

def reduction_grid():
    """
    j in [1,3] and s in [j, j+6]
    """
    grid = ParameterGrid('reduction')
    for j in range(1, 4):
        for s in range(j, j + 7):
            grid.add_cell(j, s, 1)
    return grid
