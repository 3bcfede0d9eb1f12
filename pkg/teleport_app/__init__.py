""" Cl(3) の多重ベクトルによる量子テレポーテーションの幾何版 """
