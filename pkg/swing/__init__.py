# Swing Lemma machinery: transpositions, swings and trajectories