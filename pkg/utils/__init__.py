# Utils Module
# Graph model, exact solvers, family formulas and the theorem harness
