"""数据模型层"""
