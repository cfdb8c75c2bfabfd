# C1-diagram coordinates, validation and rendering