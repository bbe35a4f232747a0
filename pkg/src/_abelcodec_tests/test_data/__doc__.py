"""This module contains test data.

Each yaml file holds the expected Z-sets, relative Parikh sets and values of the
abelian complexity for one family of digit patterns. Z-sets are written as pairs
``[z, z_tilde]``, relative Parikh vectors as lists of ints.

"""
