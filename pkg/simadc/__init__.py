'''Simulator for voltage controlled stochastic switching of low barrier
nanomagnets and the counter based ADC built on top of it.
'''

__version__ = '0.1.0'
