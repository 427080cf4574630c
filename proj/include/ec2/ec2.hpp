#ifndef EC2_EC2_HPP
#define EC2_EC2_HPP

#include <ec2/bounds.hpp>
#include <ec2/connectivity.hpp>
#include <ec2/error.hpp>
#include <ec2/graph.hpp>
#include <ec2/instances.hpp>
#include <ec2/lp.hpp>
#include <ec2/random.hpp>
#include <ec2/rational.hpp>
#include <ec2/report.hpp>
#include <ec2/segments.hpp>
#include <ec2/solver.hpp>

#endif // EC2_EC2_HPP
