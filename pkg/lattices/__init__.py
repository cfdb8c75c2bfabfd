# Lattice representation, validators and constructions