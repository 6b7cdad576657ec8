# orelab: Newton polygons, Ore index and monogeneity of pure fields
