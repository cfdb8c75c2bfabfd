# Poset property checkers and lemma validators