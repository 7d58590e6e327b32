"""
J_n 计数工具模块

脚本把本目录加入 sys.path 后直接按模块名导入，例如 ``from graph_utils import ColoredGraph``。
"""
