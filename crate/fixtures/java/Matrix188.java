public class Matrix188
{
  public static double average(int[] data)
  {
    double total = 0;
    for (int v : data)
    {
      total = total + v;
    }
    return total / data.length;
  }

  public static double bmi(double weight, double height)
  {
    double value = weight / Math.pow(height, 2);
    return Math.round(value * 10) / 10.0;
  }

  public static void main(String[] args)
  {
    int[] numbers = {4, 2, 3, 3, 1, 6};
    double avg = average(numbers);
    System.out.println("Average: " + avg);
    System.out.println("BMI: " + bmi(89.5, 1.66));
  }
}
