# Congruence oracle: principal congruences, P and edge colors