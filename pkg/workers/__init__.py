"""
Workers package: process-pool fan-out shared by enumeration, annealing and table runs
"""
