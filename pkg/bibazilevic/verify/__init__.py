"""Exact reproduction of the proof chain and the extremal search over its relaxed problem"""
