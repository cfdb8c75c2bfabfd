# Shared models, configuration and errors for the slim lattice toolkit