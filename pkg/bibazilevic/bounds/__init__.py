"""Bounds on |a2| and |a3|, their printed specializations and the audit comparing both"""
