"""
Storage package: document formats for squares, permutations, certificates and manifests
"""
